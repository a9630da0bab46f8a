#include "CLI11.hpp"
#include "qdk/boqd.hpp"
#include "qdk/graphops.hpp"
#include "qdk/operad.hpp"
#include "qdk/realize.hpp"
#include "qdk/serialize.hpp"
#include "qdk/suites.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace qdk;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<std::string> qd, boqd;
    std::string family, shell, functor, product, realization, format = "json", out, suite;
    int k = 0, n = -1, nmax = 0, wmax = 0, trials = 0;
    std::uint64_t seed = 42;
    bool relations = false, holonomy = false, timing = false;
};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_file(const std::string& s) { return s.size() > 5 && s.substr(s.size() - 5) == ".json"; }

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

QuadraticData resolve_qd(const std::string& name, const Args& a) {
    if (is_file(name)) return qd_from_json(read_json(name));
    if (a.n < 0) throw UsageError("--n is required for named data " + name);
    if (name == "AOS") return aos_qd(a.n);
    return build_family(name, a.k > 0 ? a.k : 2, a.n).component(a.n);
}

BOQDData resolve_boqd(const std::string& name) {
    if (is_file(name)) return boqd_from_json(read_json(name));
    if (lower(name) == "com") return com_boqd();
    if (lower(name) == "lie") return lie_boqd();
    throw UsageError("unknown BOQD " + name);
}

BoqdProduct boqd_product_of(const std::string& s) {
    for (auto p : {BoqdProduct::Black, BoqdProduct::White, BoqdProduct::Vee, BoqdProduct::Oplus, BoqdProduct::TriL,
                   BoqdProduct::TriR, BoqdProduct::UCirc, BoqdProduct::Circ})
        if (lower(boqd_product_name(p)) == lower(s)) return p;
    throw UsageError("unknown BOQD product " + s);
}

void emit(const std::string& text, const Args& a) {
    if (a.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write " + a.out);
    f << text;
}

std::string tsv_line(const std::vector<std::size_t>& d) {
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "\t" : "") + std::to_string(d[i]);
    return s + "\n";
}

int cmd_dims(const Args& a) {
    Json j;
    std::vector<std::size_t> dims;
    if (!a.family.empty() && a.relations) {
        int nmax = a.nmax > 0 ? a.nmax : (a.n > 0 ? a.n : 4);
        auto f = build_family(a.family, a.k > 0 ? a.k : 2, nmax);
        auto all = relation_dims(f, nmax);
        dims.assign(all.begin() + 1, all.end());
        j["object"] = f.name;
        j["table"] = "relation dims, arities 1.." + std::to_string(nmax);
    } else if (!a.family.empty() && a.holonomy) {
        if (a.n < 0) throw UsageError("--holonomy needs --n");
        auto f = build_family(a.family, a.k > 0 ? a.k : 2, a.n);
        dims = holonomy_dims(f, a.n, a.wmax > 0 ? a.wmax : 4);
        j["object"] = f.name + "(" + std::to_string(a.n) + ")";
        j["table"] = "holonomy Lie dims, weights 1.." + std::to_string(dims.size());
    } else {
        std::string name = !a.qd.empty() ? a.qd.front() : a.family;
        if (name.empty()) throw UsageError("dims needs --qd or --family");
        if (a.qd.size() > 1) throw UsageError("dims takes one --qd");
        auto q = resolve_qd(name, a);
        j["object"] = is_file(name) ? name : name + "(" + std::to_string(a.n) + ")";
        if (a.relations) {
            dims = {q.r.dim()};
            j["table"] = "relation dim";
        } else if (a.realization == "all") {
            const int wmax = a.wmax > 0 ? a.wmax : 4;
            std::string tsv = "realization";
            for (int w = 0; w <= wmax; ++w) tsv += "\t" + std::to_string(w);
            tsv += "\n";
            j["table"] = "weight dims by realization";
            for (auto r : {Realization::A, Realization::Tc, Realization::S, Realization::Sc, Realization::L}) {
                std::vector<std::size_t> d;
                try {
                    d = hilbert_series(r, q, wmax);
                } catch (const FlavorMismatch&) {
                    continue;  // not defined for this flavor
                }
                j["rows"][realization_name(r)] = d;
                tsv += realization_name(r) + "\t" + tsv_line(d);
            }
            emit(a.format == "tsv" ? tsv : j.dump(2) + "\n", a);
            return 0;
        } else {
            Realization r = q.flavor == Flavor::Symmetric ? Realization::S : Realization::A;
            if (!a.realization.empty()) r = parse_realization(a.realization);
            dims = hilbert_series(r, q, a.wmax > 0 ? a.wmax : 4);
            j["table"] = "weight dims of " + realization_name(r);
        }
    }
    j["dims"] = dims;
    emit(a.format == "tsv" ? tsv_line(dims) : j.dump(2) + "\n", a);
    return 0;
}

int cmd_verify(const Args& a) {
    SuiteOptions o;
    o.seed = a.seed;
    o.trials = a.trials;
    o.family = a.family;
    o.shell = a.shell;
    o.k = a.k;
    o.nmax = a.nmax;
    o.wmax = a.wmax;
    auto t0 = std::chrono::steady_clock::now();
    auto rep = run_suite(a.suite, o);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    auto j = rep.to_json();
    if (a.timing) j["runtime_ms"] = ms;
    if (a.format == "tsv") {
        std::ostringstream s;
        s << "suite\t" << rep.suite << "\nseed\t" << rep.seed << "\nstatus\t" << (rep.ok() ? "PASS" : "FAIL") << "\n";
        if (a.timing) s << "runtime_ms\t" << ms << "\n";
        for (const auto& c : j["cases"])
            s << c["status"].get<std::string>() << "\t" << c["name"].get<std::string>() << "\t"
              << c["details"].get<std::string>() << "\n";
        emit(s.str(), a);
    } else {
        emit(j.dump(2) + "\n", a);
    }
    return rep.ok() ? 0 : 1;
}

int cmd_build(const Args& a) {
    Json out;
    if (!a.boqd.empty()) {
        std::vector<BOQDData> xs;
        for (const auto& b : a.boqd) xs.push_back(resolve_boqd(b));
        BOQDData r = xs[0];
        if (!a.product.empty()) {
            if (xs.size() != 2) throw UsageError("--product needs two --boqd");
            r = boqd_product(boqd_product_of(a.product), xs[0], xs[1]);
        } else if (xs.size() != 1) {
            throw UsageError("two --boqd need --product");
        }
        if (!a.functor.empty()) {
            if (a.functor != "star") throw UsageError("BOQD supports --functor star only");
            r = boqd_dual(r);
        }
        out = boqd_to_json(r);
    } else if (!a.qd.empty()) {
        std::vector<QuadraticData> xs;
        for (const auto& q : a.qd) xs.push_back(resolve_qd(q, a));
        QuadraticData r = xs[0];
        if (!a.product.empty()) {
            if (xs.size() != 2) throw UsageError("--product needs two --qd");
            r = monoidal_product(parse_product(lower(a.product)), xs[0], xs[1]);
        } else if (xs.size() != 1) {
            throw UsageError("two --qd need --product");
        }
        if (!a.functor.empty()) r = apply_functor(parse_functor(lower(a.functor)), r);
        out = qd_to_json(r);
    } else if (!a.family.empty()) {
        int nmax = a.nmax > 0 ? a.nmax : 4;
        out = family_to_json(build_family(a.family, a.k > 0 ? a.k : 2, nmax), nmax);
    } else {
        throw UsageError("build needs --qd, --boqd or --family");
    }
    emit(out.dump(2) + "\n", a);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quadratic data toolkit"};
    app.require_subcommand(1);
    Args a;

    auto common = [&](CLI::App* s) {
        s->add_option("--family", a.family, "operad family: BKW DK HG RHG EHKR LG LHG");
        s->add_option("--k", a.k, "hyperedge size");
        s->add_option("--nmax", a.nmax, "maximal arity");
        s->add_option("--wmax", a.wmax, "maximal weight");
        s->add_option("--format", a.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
        s->add_option("--out", a.out, "write to FILE");
    };

    auto* dims = app.add_subcommand("dims", "dimension tables");
    common(dims);
    dims->add_option("--qd", a.qd, "AOS, a family name, or a .json file");
    dims->add_option("--n", a.n, "arity");
    dims->add_flag("--relations", a.relations, "relation dims");
    dims->add_flag("--holonomy", a.holonomy, "holonomy Lie dims of --family at --n");
    dims->add_option("--realization", a.realization, "A, S, Tc, Sc, L, or all for one row each");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    std::string names;
    for (const auto& s : suite_names()) names += (names.empty() ? "" : ", ") + s;
    verify->add_option("suite", a.suite, names)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", a.seed, "random seed");
    verify->add_option("--trials", a.trials, "random instances");
    verify->add_option("--shell", a.shell, "shell family for minimality");
    verify->add_flag("--timing", a.timing, "include runtime_ms");

    auto* build = app.add_subcommand("build", "serialize data, products, functor images, families");
    common(build);
    build->add_option("--qd", a.qd, "AOS, a family name, or a .json file (repeat for products)");
    build->add_option("--boqd", a.boqd, "Com, Lie, or a .json file (repeat for products)");
    build->add_option("--n", a.n, "arity");
    build->add_option("--functor", a.functor, "lambda sigma scripts antishriek star shriek");
    build->add_option("--product", a.product, "tensor utensor vee oplus black white; BOQD: tril trir ucirc circ");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*dims) return cmd_dims(a);
        if (*verify) return cmd_verify(a);
        if (*build) return cmd_build(a);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
