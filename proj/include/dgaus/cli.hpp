#ifndef DGAUS_CLI_HPP
#define DGAUS_CLI_HPP

// Report-producing pipelines behind the command-line driver.  Each subcommand
// turns a parsed presentation into a list of task results; emitters render
// them as text or JSON.  All exact values are serialized as decimal strings so
// reports are byte-stable across platforms.

#include <json.hpp>

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "glue_checks.hpp"
#include "modfunctors.hpp"
#include "presentation.hpp"
#include "quiver.hpp"
#include "reglue.hpp"
#include "rng.hpp"

namespace dgaus {

struct TaskResult {
    std::string name;
    std::string outcome;  // "pass" | "fail" | "bound"
    std::vector<std::pair<std::string, std::string>> facts;
    std::string failure;  // first violated identity when outcome == "fail"

    void fact(const std::string& k, const std::string& v) { facts.emplace_back(k, v); }
    void fact(const std::string& k, std::size_t v) { facts.emplace_back(k, std::to_string(v)); }
    void fail(const std::string& what) {
        if (outcome != "fail") failure = what;
        outcome = "fail";
    }
};

struct Report {
    std::string command;
    std::string field;
    std::uint64_t seed = 0;
    std::size_t cap = 0;
    std::vector<TaskResult> tasks;

    // fail dominates; otherwise any inconclusive bound is reported
    int exit_code() const {
        bool bound = false;
        for (auto& t : tasks) {
            if (t.outcome == "fail") return 1;
            if (t.outcome == "bound") bound = true;
        }
        return bound ? 2 : 0;
    }
};

namespace detail {

inline std::string list_str(const std::vector<std::size_t>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
    return s + "]";
}

}  // namespace detail

// --- tasks on a built instance ----------------------------------------------

template <class K>
TaskResult task_build(const Instance<K>& inst) {
    TaskResult t{.name = "build", .outcome = "pass"};
    t.fact("ring_dim", inst.ring.dim());
    t.fact("ideal_dim", inst.rad.dim());
    t.fact("width", inst.n);
    t.fact("algebra_dim", inst.alg.total.dim());
    std::vector<std::size_t> blocks;
    for (std::size_t i = 1; i <= inst.n; ++i) blocks.push_back(inst.alg.bdim(i, i));
    t.fact("diagonal_block_dims", detail::list_str(blocks));
    if (!validate_artin_ring(inst.ring).ok()) t.fail("commutative ring axioms");
    else if (!validate_algebra(inst.alg.total).ok()) t.fail("block algebra axioms");
    else if (!check_endomorphism_embedding(inst.alg)) t.fail("endomorphism embedding");
    return t;
}

template <class K>
TaskResult task_quiver(const Instance<K>& inst) {
    TaskResult t{.name = "quiver", .outcome = "pass"};
    auto qp = quiver_presentation(inst.alg);
    t.fact("vertices", qp.vertices);
    t.fact("arrow_count", qp.arrows.size());
    for (auto& a : qp.arrows)
        t.fact("arrow " + a.name,
               std::to_string(a.src) + " -> " + std::to_string(a.dst));
    t.fact("relation_count", qp.relations.size());
    for (std::size_t i = 0; i < qp.relations.size(); ++i)
        t.fact("relation " + std::to_string(i + 1), qp.relations[i].pretty);
    t.fact("radical_nilpotency", qp.nilpotency);
    return t;
}

template <class K>
TaskResult task_gldim(const Instance<K>& inst, const PresentationFile& p, std::size_t cap) {
    TaskResult t{.name = "gldim", .outcome = "pass"};
    auto bd = basic_data(inst.alg);
    auto g = gldim(bd, cap);
    if (g.status == ResolutionStatus::Finite) {
        t.fact("gldim", g.value);
        t.fact("simple_pdims", detail::list_str(g.simple_pdims));
        if (p.grid_kind == "powers") {
            std::size_t bound = 2 * (inst.n - 1);
            t.fact("bound", bound);
            if (g.value > bound) t.fail("global dimension bound 2(n-1)");
        }
    } else if (g.status == ResolutionStatus::Periodic) {
        t.fact("gldim", "infinite");
        t.fact("syzygy_period", g.period);
    } else {
        t.outcome = "bound";
        t.fact("gldim", "> " + std::to_string(cap) + " (cap reached)");
    }
    return t;
}

template <class K>
TaskResult task_smooth(const Instance<K>& inst, std::size_t cap) {
    TaskResult t{.name = "smooth", .outcome = "pass"};
    auto bd = basic_data(inst.alg);
    auto s = smoothness_check(bd, cap);
    if (s.status == ResolutionStatus::Finite) {
        t.fact("smooth", "true");
        t.fact("diagonal_resolution_length", s.length);
    } else if (s.status == ResolutionStatus::Periodic) {
        t.fact("smooth", "false");
        t.fact("syzygy_period", s.period);
    } else {
        t.outcome = "bound";
        t.fact("smooth", "unknown (cap reached)");
    }
    return t;
}

template <class K>
TaskResult task_sod(const Instance<K>& inst, std::size_t cap) {
    TaskResult t{.name = "sod-check", .outcome = "pass"};
    auto rep = sod_certificate_modules(inst.alg, cap);
    t.fact("layers", rep.layers);
    t.fact("layer_dims", detail::list_str(rep.layer_dims));
    t.fact("layer_ring_dims", detail::list_str(rep.layer_ring_dims));
    if (!rep.semiorthogonal) t.fail("semiorthogonality of the layers");
    else if (!rep.layer_end_rings_match) t.fail("layer endomorphism rings");
    else if (!rep.cartan_unimodular) t.fail("unimodular Cartan matrix");
    return t;
}

template <class K>
TaskResult task_lift(const Instance<K>& inst, std::uint64_t seed) {
    TaskResult t{.name = "lift-check", .outcome = "pass"};
    auto ctx = make_rho_context(inst.alg);
    auto rd = local_data(inst.ring, inst.rad);
    std::vector<RightModule<K>> mods;
    std::vector<LiftResult<K>> lifts;
    for (std::uint64_t s = 0; s < 5; ++s) mods.push_back(random_module(rd, seed + s));
    for (auto& m : mods) {
        auto l = lift_object(ctx, rd, m);
        if (!l.pushforward_matches) t.fail("lifted object pushes forward to the input");
        lifts.push_back(std::move(l));
    }
    t.fact("objects_lifted", mods.size());
    std::size_t maps = 0;
    for (std::size_t i = 0; i + 1 < mods.size(); ++i) {
        auto homs = hom_space(mods[i], mods[i + 1]);
        if (homs.empty()) continue;
        auto lf = lift_morphism(ctx, rd, mods[i], mods[i + 1], homs.front(), lifts[i],
                                lifts[i + 1]);
        if (!lf.commutes) t.fail("lifted morphism pushes forward to the input");
        ++maps;
    }
    t.fact("morphisms_lifted", maps);
    return t;
}

// --- seeded gluing demos (independent of the presentation) ------------------

namespace detail {

template <class K>
struct DemoGluing {
    BackedCategory<K> b1, b2;
    FinDGBimodule<K> phi;
    Gluing<K> g;

    DemoGluing(std::mt19937_64& rng, const FieldSpec& fs) {
        CochainComplex<K> m1, m2;
        do m1 = random_complex<K>(rng, fs, 0, 1, 1); while (!m1.total_dim());
        do m2 = random_complex<K>(rng, fs, 0, 1, 1); while (!m2.total_dim());
        b1 = backed_category<K>(fs, {CochainComplex<K>{}, m1}, 0);
        b2 = backed_category<K>(fs, {CochainComplex<K>{}, m2}, 0);
        phi = backed_bimodule(b1, b2).bimod;
        g = Gluing<K>(b1.cat, b2.cat, phi);
    }

    std::size_t random_object(std::mt19937_64& rng, const FieldSpec& fs) {
        const auto& v = phi.at(1, 1);
        std::vector<K> mu(v.dim(0));
        if (!mu.empty()) {
            auto ker = kernel_basis(v.diff(0));
            std::uniform_int_distribution<int> dist(-2, 2);
            for (std::size_t j = 0; j < ker.cols(); ++j) {
                K c = ScalarOps<K>::from_int(fs, dist(rng));
                for (std::size_t i = 0; i < mu.size(); ++i) mu[i] += ker(i, j) * c;
            }
        }
        return g.add_object(GluedObject<K>{1, 1, mu});
    }
};

}  // namespace detail

template <class K>
TaskResult task_glue_demo(const FieldSpec& fs, std::uint64_t seed) {
    TaskResult t{.name = "glue-demo", .outcome = "pass"};
    std::mt19937_64 rng(seed);
    const int trials = 3;
    for (int trial = 0; trial < trials && t.outcome == "pass"; ++trial) {
        detail::DemoGluing<K> fx(rng, fs);
        fx.random_object(rng, fs);
        fx.random_object(rng, fs);
        fx.g.build();
        if (!validate_dg_category(fx.g.cat).ok()) {
            t.fail("glued category axioms");
            break;
        }
        for (std::size_t m = 0; m < fx.g.objects.size(); ++m)
            for (std::size_t n = 0; n < fx.g.objects.size(); ++n) {
                const auto& M = fx.g.objects[m];
                const auto& N = fx.g.objects[n];
                for (int k = -4; k <= 4; ++k)
                    if (fx.g.cat.hom_dim(m, n, k) !=
                        fx.b1.cat.hom_dim(M.x1, N.x1, k) + fx.b2.cat.hom_dim(M.x2, N.x2, k) +
                            fx.phi.dim(N.x2, M.x1, k - 1))
                        t.fail("three-block Hom dimension identity");
            }
        auto adj = adjoint_functors(fx.g);
        if (!adj.i1_fully_faithful || !adj.i2_fully_faithful) t.fail("embeddings fully faithful");
        else if (!adj.i1_star_i2_zero) t.fail("left adjoint kills the second component");
        else if (!adj.i1_shriek_i2_is_shifted_phi) t.fail("right adjoint computes the shifted bimodule");
    }
    t.fact("gluings_checked", static_cast<std::size_t>(trials));
    return t;
}

template <class K>
TaskResult task_reglue_demo(const FieldSpec& fs, std::uint64_t seed) {
    TaskResult t{.name = "reglue-demo", .outcome = "pass"};
    std::mt19937_64 rng(seed);
    const int trials = 2;
    for (int trial = 0; trial < trials && t.outcome == "pass"; ++trial) {
        detail::DemoGluing<K> fx(rng, fs);
        fx.g.embed1(1);
        fx.g.embed2(1);
        fx.random_object(rng, fs);
        fx.g.build();
        auto rep = reglue(fx.g, fx.b1.cat, identity_functor(fx.b1.cat), fx.b2.cat,
                          identity_functor(fx.b2.cat));
        if (!rep.tau1_qff || !rep.tau2_qff) t.fail("base-change functors quasi-fully-faithful");
        else if (!rep.relations_closed) t.fail("transported relations closed under d");
        else if (!rep.comparison_quasi_iso) t.fail("comparison map quasi-isomorphism");
        else if (!rep.hom_cohomology_preserved) t.fail("Hom cohomology preserved");
        else if (!validate_bimodule(fx.b1.cat, fx.b2.cat, rep.bimodule.phi).ok())
            t.fail("transported bimodule axioms");
    }
    t.fact("regluings_checked", static_cast<std::size_t>(trials));
    return t;
}

// --- dispatch ----------------------------------------------------------------

struct RunOptions {
    std::string field_override;  // "", "q" or "fp:<p>"
    std::uint64_t seed = 1;
    std::size_t cap = 40;
};

inline const std::vector<std::string>& all_subcommands() {
    static const std::vector<std::string> v{"build",      "quiver",      "sod-check",
                                            "gldim",      "smooth",      "glue-demo",
                                            "reglue-demo", "lift-check", "full-verify"};
    return v;
}

namespace detail {

template <class K>
void run_tasks(Report& rep, const std::vector<std::string>& names, const PresentationFile& p,
               const FieldSpec& fs, const RunOptions& opt) {
    Instance<K> inst;
    bool built = false;
    auto instance = [&]() -> Instance<K>& {
        if (!built) {
            inst = build_instance<K>(p, fs);
            built = true;
        }
        return inst;
    };
    for (auto& name : names) {
        TaskResult t;
        try {
            if (name == "build") t = task_build(instance());
            else if (name == "quiver") t = task_quiver(instance());
            else if (name == "gldim") t = task_gldim(instance(), p, opt.cap);
            else if (name == "smooth") t = task_smooth(instance(), opt.cap);
            else if (name == "sod-check") t = task_sod(instance(), opt.cap);
            else if (name == "lift-check") t = task_lift(instance(), opt.seed);
            else if (name == "glue-demo") t = task_glue_demo<K>(fs, opt.seed);
            else if (name == "reglue-demo") t = task_reglue_demo<K>(fs, opt.seed);
            else throw SemanticError("unknown task '" + name + "'");
        } catch (const std::exception& e) {
            t.name = name;
            t.fail(e.what());
        }
        rep.tasks.push_back(std::move(t));
    }
}

}  // namespace detail

inline Report run_command(const std::string& subcommand, const PresentationFile& p,
                          const RunOptions& opt) {
    PresentationFile pf = p;
    if (!opt.field_override.empty()) {
        if (opt.field_override == "q") {
            pf.field_kind = "q";
            pf.field_p = 0;
        } else if (opt.field_override.rfind("fp:", 0) == 0) {
            pf.field_kind = "fp";
            pf.field_p = std::stoll(opt.field_override.substr(3));
        } else {
            throw SemanticError("--field must be q or fp:<p>");
        }
    }

    Report rep;
    rep.command = subcommand;
    rep.seed = opt.seed;
    rep.cap = opt.cap;

    std::vector<std::string> names;
    if (subcommand == "full-verify") {
        names = pf.tasks;
        if (names.empty())
            names = {"build", "quiver", "gldim", "smooth", "sod-check",
                     "lift-check", "glue-demo", "reglue-demo"};
        // deterministic assembly order
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
    } else {
        names = {subcommand};
    }

    if (pf.field_kind == "q") {
        rep.field = "q";
        detail::run_tasks<Rat>(rep, names, pf, FieldSpec::rationals(), opt);
    } else {
        rep.field = "fp:" + std::to_string(pf.field_p);
        detail::run_tasks<Fp>(rep, names, pf, FieldSpec::prime(pf.field_p), opt);
    }
    return rep;
}

// --- emitters ----------------------------------------------------------------

inline std::string emit_text(const Report& rep) {
    std::ostringstream os;
    os << "command: " << rep.command << "\nfield: " << rep.field << "\nseed: " << rep.seed
       << "\ncap: " << rep.cap << "\n";
    for (auto& t : rep.tasks) {
        std::string shout = t.outcome;
        for (auto& c : shout) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        os << "\n== " << t.name << ": " << shout << "\n";
        for (auto& [k, v] : t.facts) os << "   " << k << ": " << v << "\n";
        if (!t.failure.empty()) os << "   violated: " << t.failure << "\n";
    }
    return os.str();
}

inline std::string emit_json(const Report& rep) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = rep.command;
    j["field"] = rep.field;
    j["seed"] = std::to_string(rep.seed);
    j["cap"] = std::to_string(rep.cap);
    j["tasks"] = nlohmann::ordered_json::array();
    for (auto& t : rep.tasks) {
        nlohmann::ordered_json jt;
        jt["name"] = t.name;
        jt["outcome"] = t.outcome;
        jt["facts"] = nlohmann::ordered_json::object();
        for (auto& [k, v] : t.facts) jt["facts"][k] = v;
        if (!t.failure.empty()) jt["failure"] = t.failure;
        j["tasks"].push_back(std::move(jt));
    }
    return j.dump(2) + "\n";
}

}  // namespace dgaus

#endif
