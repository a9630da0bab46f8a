#include "qdk/suites.hpp"

#include "qdk/boqd.hpp"
#include "qdk/faces.hpp"
#include "qdk/graphops.hpp"
#include "qdk/operad.hpp"
#include "qdk/realize.hpp"

#include <map>
#include <optional>

namespace qdk {

namespace {

// Counts instances of one check and keeps the first failure.
struct Tally {
    std::size_t count = 0;
    std::optional<Json> witness;
    std::string reason;

    void add(bool ok, const Json& w, const std::string& why = "") {
        ++count;
        if (!ok && !witness) {
            witness = w;
            reason = why;
        }
    }
    void put(Report& rep, const std::string& name, const std::string& unit) const {
        std::string d = std::to_string(count) + " " + unit;
        if (witness && !reason.empty()) d += ", " + reason;
        rep.add(CaseResult{name, witness ? Status::Fail : Status::Pass, d, witness});
    }
};

void append(Report& rep, const Report& sub, const std::string& prefix = "") {
    for (auto c : sub.cases) {
        c.name = prefix + c.name;
        rep.add(std::move(c));
    }
}

int pick(int v, int dflt) { return v > 0 ? v : dflt; }

Json trial(int t) { return Json{{"trial", t}}; }

std::size_t binom(int n, int r) {
    if (r < 0 || r > n) return 0;
    std::size_t c = 1;
    for (int i = 1; i <= r; ++i) c = c * static_cast<std::size_t>(n - r + i) / static_cast<std::size_t>(i);
    return c;
}

// ---------------------------------------------------------------- suites

Report qd_coherence(const SuiteOptions& o) {
    Report rep;
    const int trials = pick(o.trials, 200);
    Rng master(o.seed);
    Tally phi, psi, assoc, unit, prod_assoc;
    for (int t = 0; t < trials; ++t) {
        Rng r = master.split();
        auto a = random_qd(r, Flavor::Plain, 3, 0, 1, "a"), a2 = random_qd(r, Flavor::Plain, 3, 0, 1, "c");
        auto b = random_qd(r, Flavor::Plain, 3, 0, 1, "b"), b2 = random_qd(r, Flavor::Plain, 3, 0, 1, "d");
        auto p = interchange_phi(a, a2, b, b2);
        phi.add(p.check.ok, trial(t), p.check.reason);
        auto q = interchange_psi(a, a2, b, b2);
        psi.add(q.check.ok, trial(t), q.check.reason);
        if (t % 4 == 0) {
            std::vector<QuadraticData> six;
            for (int i = 0; i < 6; ++i) six.push_back(random_qd(r, Flavor::Plain, 2, 0, 1, std::string(1, char('e' + i))));
            auto res = phi_associator_check(six[0], six[1], six[2], six[3], six[4], six[5]);
            assoc.add(res.ok, trial(t), res.reason);
        }
        if (t % 4 == 1) {
            // unit and associativity laws, one product per trial
            static const std::vector<std::pair<Product, Flavor>> prods = {
                {Product::Tensor, Flavor::Plain},     {Product::UTensor, Flavor::Plain},
                {Product::UTensor, Flavor::Symmetric}, {Product::Vee, Flavor::Symmetric},
                {Product::Oplus, Flavor::Skew},        {Product::Black, Flavor::Plain},
                {Product::White, Flavor::Plain}};
            auto [pr, fl] = prods[static_cast<std::size_t>(t / 4) % prods.size()];
            auto x = random_qd(r, fl, 2, 0, 1, "x"), y = random_qd(r, fl, 2, 0, 1, "y"), z = random_qd(r, fl, 2, 0, 1, "z");
            Json w{{"trial", t}, {"product", product_name(pr)}};
            if (pr != Product::Black && pr != Product::White) {
                auto zero = zero_qd(fl);
                unit.add(same_data(monoidal_product(pr, zero, x), x) && same_data(monoidal_product(pr, x, zero), x), w);
            }
            prod_assoc.add(same_data(monoidal_product(pr, monoidal_product(pr, x, y), z),
                                     monoidal_product(pr, x, monoidal_product(pr, y, z))),
                           w);
        }
    }
    phi.put(rep, "phi morphism", "quadruples");
    psi.put(rep, "psi morphism", "quadruples");
    assoc.put(rep, "phi associator", "triples");
    unit.put(rep, "product unit laws", "instances");
    prod_assoc.put(rep, "product associativity", "triples");
    return rep;
}

Report boqd_coherence(const SuiteOptions& o) {
    Report rep;
    const int trials = pick(o.trials, 100);
    Rng master(o.seed);
    Tally phi, psi, inv;
    std::map<std::string, Tally> quint;
    const BoqdProduct outers[] = {BoqdProduct::Black, BoqdProduct::White};
    const BoqdProduct inners[] = {BoqdProduct::Vee, BoqdProduct::Oplus, BoqdProduct::TriL, BoqdProduct::TriR};
    for (int t = 0; t < trials; ++t) {
        Rng r = master.split();
        auto a = random_boqd(r, 2, "a"), a2 = random_boqd(r, 1, "c");
        auto b = random_boqd(r, 1, "b"), b2 = random_boqd(r, 2, "d");
        auto p = boqd_phi_check(a, a2, b, b2);
        phi.add(p.ok(), trial(t));
        auto q = boqd_psi_check(a, a2, b, b2);
        psi.add(q.ok(), trial(t));
        auto x = random_boqd(r, 1, "x"), x2 = random_boqd(r, 1, "y");
        auto y = random_boqd(r, 1, "u"), y2 = random_boqd(r, 1, "v");
        for (auto out : outers)
            for (auto in : inners) {
                auto rr = boqd_quintuple_check(out, in, x, x2, y, y2);
                quint[boqd_product_name(out) + "/" + boqd_product_name(in)].add(rr.ok(), trial(t));
            }
        auto i1 = random_boqd(r, 2, "p"), i2 = random_boqd(r, 2, "q");
        inv.add(koszul_involution_check(i1, i2).ok(), trial(t));
    }
    phi.put(rep, "phi", "quadruples");
    psi.put(rep, "psi", "quadruples");
    for (const auto& [name, tl] : quint) tl.put(rep, "quintuple " + name, "quadruples");
    inv.put(rep, "involutions", "pairs");

    auto com = com_boqd(), lie = lie_boqd();
    auto cd = boqd_dual(com);
    rep.add("Com* = Lie", same_boqd(cd, lie) && cd.r.dim() == 1, "dim R(Com*) = " + std::to_string(cd.r.dim()));
    rep.add("Lie* = Com", same_boqd(boqd_dual(lie), com), "dim R(Lie*) = " + std::to_string(boqd_dual(lie).r.dim()));
    append(rep, koszul_involution_check(com, lie), "involutions Com, Lie: ");
    return rep;
}

struct FamilySpec {
    FamilyKind kind;
    int k;
    int nmax;
};

const std::vector<FamilySpec>& law_families() {
    static const std::vector<FamilySpec> v = {
        {FamilyKind::BKW, 2, 6}, {FamilyKind::DK, 2, 6},  {FamilyKind::HG, 3, 6}, {FamilyKind::EHKR, 3, 6},
        {FamilyKind::HG, 4, 6},  {FamilyKind::RHG, 4, 6}, {FamilyKind::LG, 2, 8}, {FamilyKind::LHG, 3, 8}};
    return v;
}

void family_laws(Report& rep, FamilyKind kind, int k, int nmax) {
    auto f = build_family(kind, k, nmax);
    append(rep, verify_axioms(f, nmax), f.name + " axioms: ");
    append(rep, verify_relation_morphism(f, nmax), f.name + " relations: ");
}

Report operad_axioms(const SuiteOptions& o) {
    Report rep;
    if (!o.family.empty()) {
        auto kind = parse_family_kind(o.family);
        family_laws(rep, kind, pick(o.k, 2), pick(o.nmax, 6));
        return rep;
    }
    for (const auto& s : law_families()) family_laws(rep, s.kind, s.k, pick(o.nmax, s.nmax));
    append(rep, graph_operad_axioms(2, true, 5, 3));
    append(rep, graph_operad_axioms(3, true, 5, 2));
    append(rep, graph_operad_axioms(2, false, 5, 3));
    append(rep, graph_operad_axioms(3, false, 5, 3));
    return rep;
}

void minimality_case(Report& rep, FamilyKind shell, int k, int nmax) {
    auto sh = build_family(shell, k, nmax);
    FamilyKind target = shell;
    int tk = k;
    if (shell == FamilyKind::BKW) target = FamilyKind::DK;
    if (shell == FamilyKind::HG) target = k == 3 ? FamilyKind::EHKR : FamilyKind::RHG;
    if (shell != FamilyKind::BKW && shell != FamilyKind::HG && shell != FamilyKind::LG && shell != FamilyKind::LHG)
        throw std::invalid_argument("minimality needs a shell with full relations (BKW, HG, LG, LHG)");
    auto expected = build_family(target, tk, nmax);
    auto m = minimal_suboperad(sh, nmax);
    auto cmp = compare_families(expected, m, nmax);
    std::string name = "minimal(" + sh.name + ", " + std::to_string(nmax) + ") vs " + expected.name;
    rep.add(CaseResult{name, cmp.verdict == Inclusion::Equal ? Status::Pass : Status::Fail,
                       inclusion_name(cmp.verdict) + ", R dims " + dims_string(relation_dims(m, nmax)), std::nullopt});
    if (shell == FamilyKind::BKW && nmax >= 4) {
        auto d = m.component(4).r.dim();
        rep.add("minimal(BKW) dim R(4)", d == 11, std::to_string(d));
    }
}

Report minimality(const SuiteOptions& o) {
    Report rep;
    if (!o.shell.empty()) {
        minimality_case(rep, parse_family_kind(o.shell), pick(o.k, 2), pick(o.nmax, 6));
        return rep;
    }
    minimality_case(rep, FamilyKind::BKW, 2, pick(o.nmax, 5));
    minimality_case(rep, FamilyKind::HG, 3, pick(o.nmax, 6));
    minimality_case(rep, FamilyKind::HG, 4, pick(o.nmax, 6));
    return rep;
}

Report koszul_duals(const SuiteOptions& o) {
    Report rep;
    const int nmax = pick(o.nmax, 6);
    auto dk = build_family(FamilyKind::DK, 2, nmax);
    for (int n = 2; n <= nmax; ++n) {
        auto sh = apply_functor(Functor::Shriek, dk.component(n));
        auto aos = aos_qd(n);
        bool ok = sh.r == aos.r.relabel(sh.square) && sh.r.dim() == binom(n, 3) && aos.v.degrees() == sh.v.degrees();
        rep.add("DK(" + std::to_string(n) + ")^! = AOS", ok,
                "dim R = " + std::to_string(sh.r.dim()) + ", C(n,3) = " + std::to_string(binom(n, 3)));
    }
    if (nmax >= 5) {
        auto e = build_family(FamilyKind::EHKR, 3, nmax);
        for (int n = 5; n <= nmax; ++n) {
            auto sh = apply_functor(Functor::Shriek, e.component(n));
            auto pent = ehkr_pentagon_qd(n, false);
            auto ov = ehkr_overlap_span(pent);
            auto both = sum(pent.r, ov);
            bool ok = both.relabel(sh.square) == sh.r;
            rep.add("EHKR(" + std::to_string(n) + ")^! presentation", ok,
                    "annihilator " + std::to_string(sh.r.dim()) + " = pentagons " + std::to_string(pent.r.dim()) +
                        " + overlaps " + std::to_string(ov.dim()));
        }
    }
    // Poincaré polynomials ∏_{i<n} (1 + i t)
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::size_t> poly{1};
        for (int i = 1; i < n; ++i) {
            std::vector<std::size_t> next(poly.size() + 1, 0);
            for (std::size_t j = 0; j < poly.size(); ++j) {
                next[j] += poly[j];
                next[j + 1] += poly[j] * static_cast<std::size_t>(i);
            }
            poly = next;
        }
        poly.resize(static_cast<std::size_t>(n) + 1, 0);
        auto h = hilbert_series(Realization::S, aos_qd(n), n);
        std::size_t total = 0, fact = 1;
        for (auto x : h) total += x;
        for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
        rep.add("S(AOS(" + std::to_string(n) + ")) Poincare", h == poly && total == fact,
                dims_string(h) + (h == poly ? " = " : " != ") + dims_string(poly) + ", total " + std::to_string(total));
    }
    for (int n = 2; n <= std::min(nmax, 5); ++n) {
        auto eu = koszul_euler_check(dk.component(n), 4);
        std::string prod;
        for (auto x : eu.product) prod += (prod.empty() ? "" : ",") + std::to_string(x);
        rep.add(CaseResult{"Euler DK(" + std::to_string(n) + ")", eu.result.status, "(" + prod + ")", eu.result.witness});
    }
    return rep;
}

Report gra_iso(const SuiteOptions& o) {
    Report rep;
    if (!o.family.empty()) {
        int nmax = pick(o.nmax, 4);
        auto f = build_family(o.family, pick(o.k, 2), nmax);
        append(rep, sc_iso_check(f, nmax, pick(o.wmax, 3)));
        return rep;
    }
    append(rep, sc_iso_check(build_family(FamilyKind::BKW, 2, 4), 4, 3));
    append(rep, sc_iso_check(build_family(FamilyKind::HG, 3, 5), 5, 2));
    append(rep, sc_iso_check(build_family(FamilyKind::LG, 2, 8), 8, 7));
    append(rep, sc_iso_check(build_family(FamilyKind::LHG, 3, 7), 7, 3));

    auto gra = compose_graphs(parse_graph("n=2;k=2;edges=12"), 1, parse_graph("n=3;k=2;edges=12,13"));
    GraphSum want(4, 2, true);
    for (auto s : {"n=4;k=2;edges=12,13,14", "n=4;k=2;edges=12,13,24", "n=4;k=2;edges=12,13,34"})
        want.add(parse_graph(s), 1);
    rep.add(CaseResult{"displayed Gra composition", gra == want ? Status::Pass : Status::Fail, gra.to_json().dump(),
                       std::nullopt});
    auto lg = compose_graphs(parse_graph("n=4;k=2;edges=12,34;linear"), 3, parse_graph("n=3;k=2;edges=12;linear"));
    GraphSum lwant(6, 2, false);
    lwant.add(parse_graph("n=6;k=2;edges=12,34,56;linear"), -1);
    rep.add(CaseResult{"displayed LGra composition", lg == lwant ? Status::Pass : Status::Fail, lg.to_json().dump(),
                       std::nullopt});
    auto g3 = compose_graphs(parse_graph("n=4;k=3;edges=123,124"), 3, parse_graph("n=3;k=3;edges=123"));
    bool g3ok = g3.terms().size() == 3;
    for (const auto& [g, c] : g3.terms()) {
        bool has = std::find(g.edges.begin(), g.edges.end(), Hyperedge{1, 2, 6}) != g.edges.end() &&
                   std::find(g.edges.begin(), g.edges.end(), Hyperedge{3, 4, 5}) != g.edges.end();
        g3ok = g3ok && has;
    }
    rep.add(CaseResult{"displayed Gra3 composition", g3ok ? Status::Pass : Status::Fail, g3.to_json().dump(),
                       std::nullopt});

    auto neg = hopf_check(2, true, 3, 2, false);
    bool caught = !neg.cases.empty() && neg.cases[0].status == Status::Fail;
    rep.add("negative control: unsigned coproduct", caught,
            caught ? "compatibility fails at " + neg.cases[0].witness->dump() : "not detected");

    auto dk = build_family(FamilyKind::DK, 2, 4);
    auto h = holonomy_dims(dk, 3, 4);
    rep.add("holonomy DK(3)", h == std::vector<std::size_t>{3, 1, 2, 3}, dims_string(h));
    append(rep, gerstenhaber_dim_check(2, 6), "Gerstenhaber ");
    return rep;
}

Report diagram_faces(const SuiteOptions& o) {
    Report rep;
    const int trials = pick(o.trials, 100);
    auto dk = build_family(FamilyKind::DK, 2, 4);
    auto tl = verify_diagram_face(DiagramFace::TopLeft, dk.component(3));
    rep.add("named: top-left on DK(3), dim R", tl.ok() && tl.cases.at(0).details == "dim R = 2", tl.cases.at(0).details);
    auto rv = verify_diagram_face(DiagramFace::RightVertical, aos_qd(3), {}, 3);
    rep.add("named: right-vertical on AOS(3)", rv.ok() && rv.cases.at(0).details == "(1,3,2,0) = (1,3,2,0)",
            rv.cases.at(0).details);
    for (int n = 3; n <= 4; ++n)
        for (auto f : all_faces()) {
            auto fl = face_flavors(f);
            if (std::find(fl.begin(), fl.end(), Flavor::Skew) == fl.end()) continue;
            auto r = verify_diagram_face(f, dk.component(n), {}, 3);
            rep.add("named: " + face_name(f) + " on DK(" + std::to_string(n) + ")", r.ok(), r.cases.at(0).details);
        }
    Rng master(o.seed);
    std::map<std::string, Tally> by_face;
    for (int t = 0; t < trials; ++t) {
        Rng r = master.split();
        for (auto f : all_faces())
            for (auto fl : face_flavors(f)) {
                auto a = random_qd(r, fl, 3, 0, 1, "x");
                auto b = random_qd(r, fl, 2, 0, 1, "y");
                auto rep1 = verify_diagram_face(f, a, b, pick(o.wmax, 3));
                by_face[face_name(f) + " " + flavor_name(fl)].add(rep1.ok(), trial(t));
            }
    }
    for (const auto& [name, tl2] : by_face) tl2.put(rep, "random: " + name, "instances");
    return rep;
}

Report realize_duality(const SuiteOptions& o) {
    Report rep;
    const int trials = pick(o.trials, 100);
    const int wmax = pick(o.wmax, 5);
    Rng master(o.seed);
    Tally tc, sc, central, pbw;
    for (int t = 0; t < trials; ++t) {
        Rng r = master.split();
        auto p = random_qd(r, Flavor::Plain, 3, 0, 1, "x");
        tc.add(hilbert_series(Realization::Tc, p, wmax) ==
                   hilbert_series(Realization::A, apply_functor(Functor::Star, p), wmax),
               trial(t));
        auto q = random_qd(r, Flavor::Symmetric, 3, 0, 1, "y");
        auto scq = hilbert_series(Realization::Sc, q, wmax);
        sc.add(scq == hilbert_series(Realization::S, apply_functor(Functor::Star, q), wmax), trial(t));
        central.add(scq == hilbert_series(Realization::Tc, apply_functor(Functor::Sigma, q), wmax), trial(t));
    }
    tc.put(rep, "duality Tc(V,R) = A(V*,R^perp)", "instances");
    sc.put(rep, "duality Sc(V,R) = S(V*,R^perp)", "instances");
    central.put(rep, "duality Sc(V,R) = Tc(V,Sigma R)", "instances");

    const int pw = 4;
    auto dk = build_family(FamilyKind::DK, 2, 4);
    auto eh = build_family(FamilyKind::EHKR, 3, 4);
    for (auto [name, q] : {std::pair<std::string, const QuadraticData*>{"DK(3)", &dk.component(3)},
                           {"DK(4)", &dk.component(4)},
                           {"EHKR(4)", &eh.component(4)}}) {
        auto c = ue_compare(*q, pw);
        c.name = "PBW " + name;
        rep.add(std::move(c));
    }
    const int skew_trials = std::max(50, trials / 2);
    for (int t = 0; t < skew_trials; ++t) {
        Rng r = master.split();
        auto q = random_qd(r, Flavor::Skew, 3, 0, 1, "z");
        auto c = ue_compare(q, pw);
        pbw.add(c.status == Status::Pass, trial(t), c.details);
    }
    pbw.put(rep, "PBW random skew", "instances");
    auto l = hilbert_series(Realization::L, dk.component(3), 4);
    l.erase(l.begin());
    rep.add("L(DK(3))", l == std::vector<std::size_t>{3, 1, 2, 3}, dims_string(l));
    return rep;
}

using SuiteFn = Report (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& table() {
    static const std::vector<std::pair<std::string, SuiteFn>> t = {
        {"qd-coherence", qd_coherence},   {"boqd-coherence", boqd_coherence}, {"operad-axioms", operad_axioms},
        {"minimality", minimality},       {"koszul-duals", koszul_duals},     {"gra-iso", gra_iso},
        {"diagram-faces", diagram_faces}, {"realize-duality", realize_duality}};
    return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> v = [] {
        std::vector<std::string> out;
        for (const auto& [n, f] : table()) out.push_back(n);
        return out;
    }();
    return v;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
    for (const auto& [n, f] : table())
        if (n == name) {
            Report rep = f(opt);
            rep.suite = name;
            rep.seed = opt.seed;
            return rep;
        }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace qdk
