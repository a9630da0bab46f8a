#include "qdk/faces.hpp"

namespace qdk {

namespace {

struct FaceInfo {
    DiagramFace face;
    const char* name;
    std::vector<Flavor> flavors;
};

const std::vector<FaceInfo>& face_table() {
    using F = Flavor;
    static const std::vector<FaceInfo> t = {
        {DiagramFace::TopExtreme, "top-extreme", {F::Skew}},
        {DiagramFace::TopLeft, "top-left", {F::Skew}},
        {DiagramFace::TopRight, "top-right", {F::Symmetric}},
        {DiagramFace::Back, "back", {F::Plain}},
        {DiagramFace::Front, "front", {F::Symmetric}},
        {DiagramFace::LeftVertical, "left-vertical", {F::Skew}},
        {DiagramFace::RightVertical, "right-vertical", {F::Symmetric}},
        {DiagramFace::CentralVertical, "central-vertical", {F::Symmetric}},
        {DiagramFace::MiddleLeft, "middle-left", {F::Skew}},
        {DiagramFace::MonoidalLambda, "monoidal-Lambda", {F::Skew}},
        {DiagramFace::MonoidalSigma, "monoidal-Sigma", {F::Symmetric}},
        {DiagramFace::MonoidalScriptS, "monoidal-ScriptS", {F::Symmetric}},
        {DiagramFace::MonoidalAntishriek, "monoidal-Antishriek", {F::Plain, F::Skew, F::Symmetric}},
        {DiagramFace::MonoidalStar, "monoidal-Star", {F::Plain, F::Symmetric}},
        {DiagramFace::MonoidalShriek, "monoidal-Shriek", {F::Plain, F::Skew}},
        {DiagramFace::MonoidalA, "monoidal-A", {F::Plain}},
        {DiagramFace::MonoidalTc, "monoidal-Tc", {F::Plain}},
        {DiagramFace::MonoidalS, "monoidal-S", {F::Symmetric}},
        {DiagramFace::MonoidalSc, "monoidal-Sc", {F::Symmetric}},
        {DiagramFace::MonoidalL, "monoidal-L", {F::Skew}},
    };
    return t;
}

const FaceInfo& info(DiagramFace f) {
    for (const auto& i : face_table())
        if (i.face == f) return i;
    throw std::invalid_argument("unknown face");
}

QuadraticData F(Functor f, const QuadraticData& q) { return apply_functor(f, q); }
QuadraticData P(Product p, const QuadraticData& a, const QuadraticData& b) { return monoidal_product(p, a, b); }

void compare_data(Report& rep, const std::string& name, const QuadraticData& x, const QuadraticData& y) {
    CaseResult c;
    c.name = name;
    if (x.v.degrees() != y.v.degrees() || x.flavor != y.flavor) {
        c.status = Status::Fail;
        c.details = "generators or flavor differ";
    } else {
        auto yr = y.r.relabel(x.square);
        auto out = x.r.first_outside(yr);
        if (!out) out = yr.first_outside(x.r);
        if (out) {
            c.status = Status::Fail;
            c.details = "relation spaces differ (dims " + std::to_string(x.r.dim()) + ", " +
                        std::to_string(y.r.dim()) + ")";
            Json w;
            w["vector"] = Json::array();
            for (const auto& e : out->entries()) w["vector"].push_back({x.square->label(e.col), to_string(e.val)});
            c.witness = w;
        } else {
            c.details = "dim R = " + std::to_string(x.r.dim());
        }
    }
    rep.add(std::move(c));
}

void compare_dims(Report& rep, const std::string& name, const std::vector<std::size_t>& x,
                  const std::vector<std::size_t>& y) {
    CaseResult c;
    c.name = name;
    c.status = x == y ? Status::Pass : Status::Fail;
    c.details = dims_string(x) + (x == y ? " = " : " != ") + dims_string(y);
    if (x != y) {
        Json w;
        w["lhs"] = x;
        w["rhs"] = y;
        c.witness = w;
    }
    rep.add(std::move(c));
}

std::vector<std::size_t> series_sum(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::vector<std::size_t> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

std::string face_name(DiagramFace f) { return info(f).name; }

DiagramFace parse_face(const std::string& s) {
    for (const auto& i : face_table())
        if (s == i.name) return i.face;
    throw std::invalid_argument("unknown diagram face: " + s);
}

const std::vector<DiagramFace>& all_faces() {
    static const std::vector<DiagramFace> v = [] {
        std::vector<DiagramFace> out;
        for (const auto& i : face_table()) out.push_back(i.face);
        return out;
    }();
    return v;
}

std::vector<Flavor> face_flavors(DiagramFace f) { return info(f).flavors; }

std::vector<std::size_t> series_product(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t n = std::min(a.size(), b.size());
    std::vector<std::size_t> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

Report verify_diagram_face(DiagramFace face, const QuadraticData& a, const std::optional<QuadraticData>& bopt,
                           int wmax) {
    const auto& fi = info(face);
    const QuadraticData& b = bopt ? *bopt : a;
    auto fl = fi.flavors;
    if (std::find(fl.begin(), fl.end(), a.flavor) == fl.end() || b.flavor != a.flavor)
        throw FlavorMismatch(std::string("face ") + fi.name + " does not apply to " + flavor_name(a.flavor) +
                             " data");
    Report rep;
    rep.suite = "diagram-faces";
    std::string n = fi.name;
    auto hs = [&](Realization r, const QuadraticData& q) { return hilbert_series(r, q, wmax); };
    using R = Realization;
    switch (face) {
        case DiagramFace::TopExtreme:
            compare_data(rep, n, F(Functor::Shriek, F(Functor::Lambda, a)), F(Functor::ScriptS, F(Functor::Shriek, a)));
            break;
        case DiagramFace::TopLeft:
            compare_data(rep, n, F(Functor::Antishriek, F(Functor::Lambda, a)),
                         F(Functor::Sigma, F(Functor::Antishriek, a)));
            break;
        case DiagramFace::TopRight:
            compare_data(rep, n, F(Functor::Star, F(Functor::Sigma, a)), F(Functor::ScriptS, F(Functor::Star, a)));
            break;
        case DiagramFace::Back:
            compare_dims(rep, n, hs(R::Tc, a), hs(R::A, F(Functor::Star, a)));
            break;
        case DiagramFace::Front:
            compare_dims(rep, n, hs(R::Sc, a), hs(R::S, F(Functor::Star, a)));
            break;
        case DiagramFace::LeftVertical:
            compare_dims(rep, n, pbw_series(lie_dims_by_parity(a, wmax), wmax), hs(R::A, F(Functor::Lambda, a)));
            break;
        case DiagramFace::RightVertical:
            compare_dims(rep, n, hs(R::S, a), hs(R::A, F(Functor::ScriptS, a)));
            break;
        case DiagramFace::CentralVertical:
            compare_dims(rep, n, hs(R::Sc, a), hs(R::Tc, F(Functor::Sigma, a)));
            break;
        case DiagramFace::MiddleLeft:
            compare_dims(rep, n, hs(R::Sc, F(Functor::Antishriek, a)),
                         hs(R::Tc, F(Functor::Antishriek, F(Functor::Lambda, a))));
            break;
        case DiagramFace::MonoidalLambda:
            compare_data(rep, n, P(Product::Tensor, F(Functor::Lambda, a), F(Functor::Lambda, b)),
                         F(Functor::Lambda, P(Product::Oplus, a, b)));
            break;
        case DiagramFace::MonoidalSigma:
            compare_data(rep, n, P(Product::UTensor, F(Functor::Sigma, a), F(Functor::Sigma, b)),
                         F(Functor::Sigma, P(Product::UTensor, a, b)));
            break;
        case DiagramFace::MonoidalScriptS:
            compare_data(rep, n, P(Product::Tensor, F(Functor::ScriptS, a), F(Functor::ScriptS, b)),
                         F(Functor::ScriptS, P(Product::Vee, a, b)));
            break;
        case DiagramFace::MonoidalAntishriek: {
            auto fa = F(Functor::Antishriek, a), fb = F(Functor::Antishriek, b);
            if (a.flavor == Flavor::Plain)
                compare_data(rep, n + " (Tensor)", P(Product::UTensor, fa, fb), F(Functor::Antishriek, P(Product::Tensor, a, b)));
            else if (a.flavor == Flavor::Skew)
                compare_data(rep, n + " (Oplus)", P(Product::UTensor, fa, fb), F(Functor::Antishriek, P(Product::Oplus, a, b)));
            else
                compare_data(rep, n + " (UTensor)", P(Product::Oplus, fa, fb),
                             F(Functor::Antishriek, P(Product::UTensor, a, b)));
            break;
        }
        case DiagramFace::MonoidalStar: {
            auto fa = F(Functor::Star, a), fb = F(Functor::Star, b);
            if (a.flavor == Flavor::Plain) {
                compare_data(rep, n + " (UTensor)", P(Product::Tensor, fa, fb), F(Functor::Star, P(Product::UTensor, a, b)));
                compare_data(rep, n + " (Tensor)", P(Product::UTensor, fa, fb), F(Functor::Star, P(Product::Tensor, a, b)));
            } else {
                compare_data(rep, n + " (UTensor)", P(Product::Vee, fa, fb), F(Functor::Star, P(Product::UTensor, a, b)));
                compare_data(rep, n + " (Vee)", P(Product::UTensor, fa, fb), F(Functor::Star, P(Product::Vee, a, b)));
            }
            break;
        }
        case DiagramFace::MonoidalShriek: {
            auto fa = F(Functor::Shriek, a), fb = F(Functor::Shriek, b);
            if (a.flavor == Flavor::Plain)
                compare_data(rep, n + " (Tensor)", P(Product::Tensor, fa, fb), F(Functor::Shriek, P(Product::Tensor, a, b)));
            else
                compare_data(rep, n + " (Oplus)", P(Product::Vee, fa, fb), F(Functor::Shriek, P(Product::Oplus, a, b)));
            break;
        }
        case DiagramFace::MonoidalA:
            compare_dims(rep, n, hs(R::A, P(Product::Tensor, a, b)), series_product(hs(R::A, a), hs(R::A, b)));
            break;
        case DiagramFace::MonoidalTc:
            compare_dims(rep, n, hs(R::Tc, P(Product::UTensor, a, b)), series_product(hs(R::Tc, a), hs(R::Tc, b)));
            break;
        case DiagramFace::MonoidalS:
            compare_dims(rep, n, hs(R::S, P(Product::Vee, a, b)), series_product(hs(R::S, a), hs(R::S, b)));
            break;
        case DiagramFace::MonoidalSc:
            compare_dims(rep, n, hs(R::Sc, P(Product::UTensor, a, b)), series_product(hs(R::Sc, a), hs(R::Sc, b)));
            break;
        case DiagramFace::MonoidalL:
            compare_dims(rep, n, hs(R::L, P(Product::Oplus, a, b)), series_sum(hs(R::L, a), hs(R::L, b)));
            break;
    }
    return rep;
}

}  // namespace qdk
