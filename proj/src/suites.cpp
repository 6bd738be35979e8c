#include "tetratrig/suites.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tetratrig/chokim.hpp"
#include "tetratrig/correspond.hpp"
#include "tetratrig/picard.hpp"

namespace tetratrig {

namespace {

constexpr double kPi = std::numbers::pi;

// Restores the process-wide tolerance when a suite returns.
class TolScope {
public:
    explicit TolScope(double t) : saved_(default_tol()) { set_default_tol(t); }
    ~TolScope() { set_default_tol(saved_); }
    TolScope(const TolScope&) = delete;
    TolScope& operator=(const TolScope&) = delete;

private:
    double saved_;
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

std::string fmt(cplx z) { return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i"; }

std::string spec_label(const MetricSpec& s) {
    std::string out = geometry_name(s.geometry);
    out += " (";
    for (int k = 0; k < 6; ++k) out += (k ? "," : "") + fmt(s.lengths[k]);
    return out + ")";
}

SuiteReport finish(std::string name, double tol, std::vector<TrialResult> trials,
                   std::vector<std::pair<std::string, std::string>> facts = {}) {
    SuiteReport r;
    r.name = std::move(name);
    r.tolerance = tol;
    r.trials = std::move(trials);
    r.facts = std::move(facts);
    r.pass = !r.trials.empty();
    for (const auto& t : r.trials) {
        r.max_residual = std::max(r.max_residual, t.residual);
        r.pass = r.pass && t.pass;
    }
    return r;
}

// Trials that threw are failures with the message as detail.
template <typename F>
TrialResult guarded_trial(int index, std::string label, F&& body) {
    TrialResult t;
    t.index = index;
    t.label = std::move(label);
    try {
        body(t);
    } catch (const std::exception& e) {
        t.pass = false;
        t.residual = std::numeric_limits<double>::infinity();
        t.detail = e.what();
    }
    return t;
}

TrialResult exact_item(int index, std::string label, bool ok, std::string detail = {}) {
    TrialResult t;
    t.index = index;
    t.label = std::move(label);
    t.pass = ok;
    t.residual = ok ? 0.0 : 1.0;
    t.detail = std::move(detail);
    return t;
}

std::vector<MetricSpec> both_geometries(const RunConfig& cfg) {
    auto h = random_specs(Geometry::Hyperbolic, cfg.trials, cfg.seed);
    auto s = random_specs(Geometry::Spherical, cfg.trials, cfg.seed + 1);
    h.insert(h.end(), s.begin(), s.end());
    return h;
}

MetricSpec all_right() {
    MetricSpec s;
    s.geometry = Geometry::Spherical;
    s.lengths.fill(kPi / 2);
    return s;
}

double rel(cplx a, cplx b) { return relative_residual(a, b); }

}  // namespace

std::vector<MetricSpec> random_specs(Geometry g, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 2 + (g == Geometry::Spherical ? 1 : 0));
    std::uniform_real_distribution<double> dist(g == Geometry::Hyperbolic ? 0.5 : 0.4,
                                                g == Geometry::Hyperbolic ? 2.0 : 1.2);
    std::vector<MetricSpec> out;
    while (int(out.size()) < count) {
        MetricSpec s;
        s.geometry = g;
        for (auto& x : s.lengths) x = dist(rng);
        try {
            validate_metric(s);
            if (!is_generic(length_function(from_metric(s)))) continue;
        } catch (const Error&) {
            continue;
        }
        out.push_back(s);
    }
    return out;
}

std::vector<TrialResult> run_trials(int n, int jobs, const std::function<TrialResult(int)>& fn) {
    std::vector<TrialResult> out(std::max(n, 0));
    int workers = std::clamp(jobs, 1, std::max(n, 1));
    if (workers == 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) out[i] = fn(i);
        });
    for (auto& t : pool) t.join();
    return out;
}

SuiteReport suite_lattice(const RunConfig&) {
    std::vector<TrialResult> items;

    // Brute force over doubled coordinates in [-2, 2]^8.
    std::size_t brute = 0, brute_l = 0, brute_a = 0, brute_d = 0;
    std::array<int, 8> d{};
    for (long code = 0; code < 390625; ++code) {
        long c = code;
        int sq = 0;
        for (int i = 0; i < 8; ++i, c /= 5) {
            d[i] = int(c % 5) - 2;
            sq += d[i] * d[i];
        }
        if (sq != 4) continue;
        LatticeVec v;
        v.d = d;
        if (!in_lattice(v)) continue;
        ++brute;
        brute_l += in_sublattice(v, SubSystem::E7L);
        brute_a += in_sublattice(v, SubSystem::E7A);
        brute_d += in_sublattice(v, SubSystem::D6);
    }
    auto count_item = [&](int i, const std::string& what, std::size_t got, std::size_t oracle, std::size_t expected) {
        items.push_back(exact_item(i, what, got == oracle && got == expected,
                                   "computed " + std::to_string(got) + ", enumeration " + std::to_string(oracle)));
    };
    count_item(0, "roots", roots().size(), brute, 240);
    count_item(1, "E7L roots", sub_roots(SubSystem::E7L).size(), brute_l, 126);
    count_item(2, "E7A roots", sub_roots(SubSystem::E7A).size(), brute_a, 126);
    count_item(3, "D6 roots", sub_roots(SubSystem::D6).size(), brute_d, 60);

    // Affine planes: 4-subsets of the even subsets closed under symmetric difference.
    std::size_t closed = 0;
    for (unsigned m = 0; m < 256; ++m) {
        if (std::popcount(m) != 4) continue;
        std::vector<int> s;
        for (int i = 0; i < 8; ++i)
            if (m >> i & 1) s.push_back(i);
        if (aff_sum(aff_sum(s[0], s[1]), aff_sum(s[2], s[3])) == kEmpty) ++closed;
    }
    count_item(4, "affine planes", affine_planes().size(), closed, 14);
    items.push_back(exact_item(5, "W(D6) order", WeylD6::instance().order() == 23040,
                               "closure order " + std::to_string(WeylD6::instance().order())));
    return finish("lattice", 0.0, std::move(items));
}

SuiteReport suite_thm11(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-7;
    auto specs = both_geometries(cfg);
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            auto eq = projective_equivalence(config_metric(specs[i], ConfigKind::Pi),
                                             config_metric(specs[i], ConfigKind::Omega), kTol);
            t.residual = eq.residual;
            t.pass = t.residual < kTol;
        });
    });
    return finish("thm11", kTol, std::move(trials),
                  {{"pairing", "Pi(T) against Omega(T) = (1, exp(i Omega_face), exp(i Omega_cycle))"}});
}

SuiteReport suite_cor12(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-8;
    auto specs = both_geometries(cfg);
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            cplx a = cross_ratio_invariant(config_metric(specs[i], ConfigKind::Pi));
            cplx b = cross_ratio_invariant(config_metric(specs[i], ConfigKind::Omega));
            t.residual = rel(a, b);
            t.pass = t.residual < kTol;
            t.detail = fmt(a);
        });
    });
    return finish("cor12", kTol, std::move(trials));
}

SuiteReport suite_solve(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-7, kRightTol = 1e-9;
    auto specs = both_geometries(cfg);
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            auto sol = solve_angles(specs[i]);
            auto oracle = metric_angles_oracle(specs[i]);
            for (int k = 0; k < 6; ++k) t.residual = std::max(t.residual, std::abs(sol.angles[k] - oracle[k]));
            t.pass = t.residual < kTol;
        });
    });
    int n = int(trials.size());
    trials.push_back(guarded_trial(n, "all-right spherical", [&](TrialResult& t) {
        auto sol = solve_angles(all_right());
        for (double a : sol.angles) t.residual = std::max(t.residual, std::abs(a - kPi / 2));
        t.pass = t.residual < kRightTol;
        t.detail = std::string("generic ") + (sol.generic ? "true" : "false");
    }));
    return finish("solve", kTol, std::move(trials), {{"all-right tolerance", fmt(kRightTol)}});
}

SuiteReport suite_thm13(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-8;
    // Hyperbolic specs whose Regge image is realizable too.
    std::vector<MetricSpec> specs;
    std::uint64_t batch = 0;
    while (int(specs.size()) < cfg.trials) {
        for (const auto& s : random_specs(Geometry::Hyperbolic, cfg.trials, cfg.seed + 1000 * ++batch)) {
            MetricSpec r = s;
            r.lengths = regge_transform(s.lengths);
            if (is_realizable(r) && int(specs.size()) < cfg.trials) specs.push_back(s);
        }
    }
    const WeylElem w = regge_element();
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            MetricSpec r = specs[i];
            r.lengths = regge_transform(specs[i].lengths);
            auto expect = regge_transform(metric_angles_oracle(specs[i]), ReggeKind::Angles);
            auto got = solve_angles(r).angles;
            for (int k = 0; k < 6; ++k)
                t.residual = std::max(t.residual, std::abs(std::remainder(got[k] - expect[k], 2 * kPi)));
            // The lattice element acting on Σ l_ij e_ij reproduces the transformed lengths.
            double lat = 0.0;
            for (int k = 0; k < 6; ++k) {
                double v = 0.0;
                for (int j = 0; j < 6; ++j) v += 0.5 * w.at(edge_aff(k), edge_aff(j)) * specs[i].lengths[j];
                lat = std::max(lat, std::abs(v - r.lengths[k]));
            }
            t.residual = std::max(t.residual, lat);
            t.pass = t.residual < kTol;
        });
    });
    return finish("thm13", kTol, std::move(trials),
                  {{"lattice element", "sign flip on e13,e14,e23,e24 composed with the reflection in "
                                       "1/2(e13+e14+e23+e24)"}});
}

SuiteReport suite_thm15(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-8, kExTol = 1e-12;
    auto specs = both_geometries(cfg);
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            MarkedTetra T = from_metric(specs[i]);
            CKFn ckL = ck_from_config(config_from_hom(length_function(T)));
            CKFn ckA = ck_from_config(config_from_hom(angle_function(T)));
            PsiResult p = psi(ckL, ckA);
            t.residual = std::min(p.residual[0], p.residual[1]);
            PrincipalPair rule = ordered_principal_pair(ckL, specs[i].geometry);
            bool rule_ok = rel(rule.p1, p.order.p1) < 1e-8 && rel(rule.p2, p.order.p2) < 1e-8;
            t.pass = p.verifying_orders == 1 && t.residual < kTol && rule_ok;
            t.detail = "verifying orders " + std::to_string(p.verifying_orders) + (rule_ok ? "" : ", order rule disagrees");
        });
    });

    // The all-right spherical example, with the marking whose orientation bit is 1.
    std::vector<std::pair<std::string, std::string>> facts;
    int n = int(trials.size());
    MarkedTetra T = from_metric(all_right(), OrientationChoice::One);
    CKFn ckL = ck_from_config(config_from_hom(length_function(T)));
    CKFn ckA = ck_from_config(config_from_hom(angle_function(T)));
    trials.push_back(guarded_trial(n, "example: CK^A = (t-i)^4/(t-1)^4", [&](TrialResult& t) {
        for (cplx z : ckA.zeros) t.residual = std::max(t.residual, std::abs(z - cplx(0, 1)));
        for (cplx p : ckA.poles) t.residual = std::max(t.residual, std::abs(p - 1.0));
        t.pass = t.residual < kExTol;
    }));
    trials.push_back(guarded_trial(n + 1, "example: principal pair {1+i, (1+i)/2}", [&](TrialResult& t) {
        PrincipalPair pp = principal_parameters(ckA);
        cplx a(1, 1), b(0.5, 0.5);
        t.residual = std::min(std::max(std::abs(pp.p1 - a), std::abs(pp.p2 - b)),
                              std::max(std::abs(pp.p1 - b), std::abs(pp.p2 - a)));
        t.pass = t.residual < kExTol;
        t.detail = fmt(pp.p1) + ", " + fmt(pp.p2);
    }));
    trials.push_back(guarded_trial(n + 2, "example: psi direction", [&](TrialResult& t) {
        PsiResult p = psi(ckL, ckA);
        MobiusMap printed;
        printed.m << cplx(1, -1), -1.0, 1.0, cplx(-1, -1);
        MobiusMap inv = printed.inverse();
        // compare as projective matrices
        cplx s = p.psi.m(1, 0) != 0.0 ? inv.m(1, 0) / p.psi.m(1, 0) : inv.m(0, 0) / p.psi.m(0, 0);
        t.residual = (inv.m - s * p.psi.m).norm() / inv.m.norm();
        t.pass = t.residual < kExTol && p.verifying_orders == 1;
        facts.push_back({"psi direction",
                         "CK^L = CK^A o psi holds for psi(t) = ((1+i)t-1)/(t-(1-i)), the inverse of "
                         "t -> (t(1-i)-1)/(t-(1+i))"});
    }));
    facts.push_back({"example lengths", "all-right spherical input uses l = pi/2; L(e_ij) = exp(2il) = -1, "
                                        "CK^L zeros at " + fmt(ckL.zeros[0])});
    facts.push_back({"example marking", "orientation bit 1 reproduces CK^A; the canonical marking gives its conjugate"});
    return finish("thm15", kTol, std::move(trials), std::move(facts));
}

SuiteReport suite_prop313(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-8;
    std::mt19937_64 rng(cfg.seed * 7 + 313);
    std::uniform_real_distribution<double> rad(0.5, 2.0), ang(0.0, 2 * kPi);
    std::vector<std::array<cplx, 6>> tuples(cfg.trials);
    for (auto& a : tuples)
        for (auto& x : a) x = std::polar(rad(rng), ang(rng));
    auto trials = run_trials(int(tuples.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, "tuple " + std::to_string(i), [&](TrialResult& t) {
            CharacterHom h;
            cplx prod = 1.0;
            for (int k = 0; k < 6; ++k) {
                h.base[edge_aff(k)] = tuples[i][k];
                prod *= tuples[i][k];
            }
            cplx disc = principal_discriminant(ck_from_config(config_from_hom(h)));
            t.residual = rel(disc, 16.0 * prod * prod * det_L(h));
            t.pass = t.residual < kTol;
        });
    });
    ExactCheck ex = prop313_exact({2, 3, -1, 5, 2, 7});
    trials.push_back(exact_item(int(trials.size()), "exact at half-values (2,3,-1,5,2,7)", ex.equal,
                                ex.lhs + " = " + ex.rhs));
    return finish("prop313", kTol, std::move(trials));
}

SuiteReport suite_gauge(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kGauge = 1e-10, kWeyl = 1e-9, kForms = 1e-10;
    constexpr int kWeylSamples = 20;
    auto specs = both_geometries(cfg);
    const auto e7 = sub_roots(SubSystem::E7L);
    std::vector<std::array<double, 3>> drift(specs.size(), {0.0, 0.0, 0.0});
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            CharacterHom L = length_function(from_metric(specs[i]));
            double g = 0.0;
            for (unsigned mask = 0; mask < 16; ++mask) {
                CharacterHom f = L;
                for (int v = 0; v < 4; ++v)
                    if (mask >> v & 1) f = f.gauge_flip(v);
                for (const auto& r : e7) g = std::max(g, rel(f(r), L(r)));
            }
            std::mt19937_64 rng(cfg.seed * 1000003 + i);
            cplx d0 = det_L(L);
            double w = 0.0;
            for (int k = 0; k < kWeylSamples; ++k)
                w = std::max(w, rel(det_L(L.compose(WeylD6::instance().random_element(rng))), d0));
            double forms = rel(d0, det_L_roots(L));
            drift[i] = {g, w, forms};
            // Scale each part by its pinned tolerance; pass when all are below 1.
            t.residual = std::max({g / kGauge, w / kWeyl, forms / kForms});
            t.pass = t.residual < 1.0;
            t.detail = "gauge " + fmt(g) + ", weyl " + fmt(w) + ", forms " + fmt(forms);
        });
    });
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    for (const auto& d : drift)
        for (int k = 0; k < 3; ++k) worst[k] = std::max(worst[k], d[k]);
    return finish("gauge", 1.0, std::move(trials),
                  {{"residual", "max of gauge/1e-10, weyl/1e-9, forms/1e-10"},
                   {"drifts", "gauge " + fmt(worst[0]) + ", weyl " + fmt(worst[1]) + ", forms " + fmt(worst[2])}});
}

SuiteReport suite_reconstruct(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-8;
    RunConfig half = cfg;
    half.trials = std::max(1, cfg.trials / 2);
    auto specs = both_geometries(half);
    std::vector<int> symmetric(specs.size(), 0);
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            MarkedTetra T = from_metric(specs[i]);
            CharacterHom L = length_function(T);
            Reconstruction r = reconstruct_from_L(L, T.orientation);
            t.residual = round_trip_residual(r.T, L);
            t.pass = t.residual < kTol;
            symmetric[i] = r.convention == QuadricSign::Symmetric;
            t.detail = "verbatim " + fmt(r.verbatim_residual) + ", all-plus " + fmt(r.symmetric_residual);
        });
    });
    int sym = int(std::count(symmetric.begin(), symmetric.end(), 1));
    return finish("reconstruct", kTol, std::move(trials),
                  {{"winning quadric sign", sym == int(specs.size()) ? "all-plus on every trial"
                                                                     : std::to_string(sym) + " all-plus wins"}});
}

SuiteReport suite_chains(const RunConfig& cfg) {
    TolScope scope(cfg.tolerance);
    constexpr double kTol = 1e-7;
    auto specs = random_specs(Geometry::Hyperbolic, cfg.trials, cfg.seed + 404);
    auto trials = run_trials(int(specs.size()), cfg.jobs, [&](int i) {
        return guarded_trial(i, spec_label(specs[i]), [&](TrialResult& t) {
            Thm14Report rep = verify_thm14(specs[i]);
            double dual = duality_residual(from_metric(specs[i]));
            double conc = 0.0;
            for (const auto& c : rep.chains) conc = std::max(conc, c.concurrency);
            t.residual = std::max(rep.worst(), dual);
            t.pass = t.residual < kTol;
            t.detail = "chains " + fmt(rep.chain_residual) + ", pattern " + fmt(rep.pattern_residual) +
                       ", duality " + fmt(dual) + ", concurrency " + fmt(conc);
        });
    });
    return finish("chains", kTol, std::move(trials));
}

SuiteReport suite_surface(const RunConfig&) {
    std::vector<TrialResult> items;
    auto add = [&](const std::string& name, auto&& fn) {
        int i = int(items.size());
        items.push_back(guarded_trial(i, name, [&](TrialResult& t) {
            std::string detail;
            t.pass = fn(detail);
            t.residual = t.pass ? 0.0 : 1.0;
            t.detail = detail;
        }));
    };
    add("reference marking Gram", [](std::string& d) {
        MarkingIso m = marking_iso_fig4();
        int bad = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) bad += pic_pairing(m.nodes[i].pic, m.nodes[j].pic) != inner(m.nodes[i].e8, m.nodes[j].e8);
        d = std::to_string(bad) + " mismatches";
        return bad == 0;
    });
    add("minimal vectors of f-perp/f", [](std::string& d) {
        MinimalVectorReport r = minimal_vectors_check();
        d = std::to_string(r.representatives) + " representatives, " + std::to_string(r.classes) + " classes";
        return r.bijective && r.classes == 240 && r.even && r.unimodular;
    });
    for (auto [name, B] : {std::pair<const char*, PicClass>{"2B identity, B = l", PicClass::l()},
                           {"2B identity, B = r", PicClass::r()}})
        add(name, [B = B](std::string& d) {
            auto found = search_2B(B);
            d = std::to_string(found.size()) + " component choices";
            if (found.size() == 1) {
                d += ":";
                for (const auto& c : found[0]) d += " " + c.str();
            }
            return found.size() == 1;
        });
    add("fiber-component identities", [](std::string& d) {
        Section34Report r = verify_section34_identities();
        int ok = int(std::count_if(r.items.begin(), r.items.end(), [](const auto& x) { return x.ok; }));
        d = std::to_string(ok) + "/" + std::to_string(r.items.size()) + " identities, " +
            std::to_string(r.assignments_found) + " orderings";
        return r.all_ok;
    });
    add("F11 + F12 = -K", [](std::string& d) {
        FiberComponents f = fiber_component_classes();
        d = (f.F11 + f.F12).str();
        return f.F11 + f.F12 == -canonical_class();
    });
    add("pi(F11) = e_I", [](std::string& d) {
        LatticeVec v = project_mod_f(fiber_component_classes().F11);
        d = v.str();
        return v == LatticeVec::unit(kI);
    });
    return finish("surface", 0.0, std::move(items));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lattice", "thm11", "cor12",  "solve",  "thm13",  "thm15",
                                                "prop313", "gauge", "reconstruct", "chains", "surface"};
    return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
    if (cfg.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (name == "lattice") return suite_lattice(cfg);
    if (name == "thm11") return suite_thm11(cfg);
    if (name == "cor12") return suite_cor12(cfg);
    if (name == "solve") return suite_solve(cfg);
    if (name == "thm13") return suite_thm13(cfg);
    if (name == "thm15") return suite_thm15(cfg);
    if (name == "prop313") return suite_prop313(cfg);
    if (name == "gauge") return suite_gauge(cfg);
    if (name == "reconstruct") return suite_reconstruct(cfg);
    if (name == "chains") return suite_chains(cfg);
    if (name == "surface") return suite_surface(cfg);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tetratrig
