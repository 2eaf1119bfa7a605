#include "coarse/verify.hpp"

#include <algorithm>
#include <set>

#include "coarse/generators.hpp"

namespace coarse {

namespace {

bool is_tree_graph(const Graph& g) {
    return g.is_connected() && static_cast<int>(g.edges.size()) == g.n - 1;
}

std::vector<int> staircase_path(int n) {
    // (0,0) -> (n-1,n-1), alternating right and down.
    std::vector<int> pts{0};
    int r = 0, c = 0;
    while (r < n - 1 || c < n - 1) {
        if (c < n - 1 && (c <= r || r == n - 1)) {
            ++c;
        } else {
            ++r;
        }
        pts.push_back(r * n + c);
    }
    return pts;
}

// Lexicographically smallest diameter pair and the first geodesic between it.
std::vector<int> diameter_geodesic(const FiniteMetricSpace& X) {
    Scaled diam = X.diameter();
    for (int x = 0; x < X.n(); ++x) {
        for (int y = x + 1; y < X.n(); ++y) {
            if (X.d(x, y) == diam) return first_geodesic(X, x, y);
        }
    }
    return {0};
}

CorpusInstance make_instance(std::string id, std::string family, int param, Graph g) {
    CorpusInstance inst;
    inst.id = std::move(id);
    inst.family = std::move(family);
    inst.family_param = param;
    inst.space = graph_metric(g);
    inst.graph = std::move(g);
    inst.helly = is_helly(inst.graph).helly;
    inst.tree = is_tree_graph(inst.graph);
    return inst;
}

Subset range_subset(int lo, int hi) {
    std::vector<int> m;
    for (int i = lo; i <= hi; ++i) m.push_back(i);
    return Subset{std::move(m)};
}

Subset all_of(const FiniteMetricSpace& X) { return range_subset(0, X.n() - 1); }

}  // namespace

Corpus build_default_corpus(const VerifyConfig& config) {
    Corpus corpus;

    for (int n = 3; n <= 8; ++n) {
        auto inst = make_instance("P" + std::to_string(n), "path", n, gen::path(n));
        inst.subsets.push_back({"Y=0", Subset{{0}}, true});
        inst.subsets.push_back({"Y=prefix", range_subset(0, n / 2), true});
        inst.subsets.push_back({"Y=all", all_of(inst.space), false});
        std::vector<int> spine(n);
        for (int i = 0; i < n; ++i) spine[i] = i;
        inst.paths.push_back({"spine", spine});
        corpus.push_back(std::move(inst));
    }

    for (int n = 4; n <= 10; ++n) {
        auto inst = make_instance("C" + std::to_string(n), "cycle", n, gen::cycle(n));
        inst.subsets.push_back({"Y=arc", range_subset(0, n / 2), false});
        std::vector<int> arc(n / 2 + 1);
        for (int i = 0; i <= n / 2; ++i) arc[i] = i;
        inst.paths.push_back({"arc", arc});
        corpus.push_back(std::move(inst));
    }

    {
        int k = 0;
        for (int n : {8, 10, 12}) {
            auto inst = make_instance("T" + std::to_string(n), "tree", n,
                                      gen::random_tree(n, config.seed + static_cast<std::uint64_t>(k++)));
            auto geo = diameter_geodesic(inst.space);
            inst.subsets.push_back({"Y=diam_geodesic", Subset::of(geo), true});
            inst.paths.push_back({"diam_geodesic", geo});
            corpus.push_back(std::move(inst));
        }
    }

    for (int n = 3; n <= 6; ++n) {
        auto inst = make_instance("G" + std::to_string(n) + "x" + std::to_string(n), "grid", n,
                                  gen::grid(n, n));
        inst.subsets.push_back({"Y=bottom_row", range_subset(0, n - 1), false});
        auto stairs = staircase_path(n);
        inst.subsets.push_back({"Y=staircase", Subset::of(stairs), false});
        inst.paths.push_back({"staircase", stairs});
        corpus.push_back(std::move(inst));
    }

    for (int n = 2; n <= 6; ++n) {
        auto inst = make_instance("L2x" + std::to_string(n), "ladder", n, gen::grid(2, n));
        inst.subsets.push_back({"Y=bottom_row", range_subset(0, n - 1), false});
        std::vector<int> row(n);
        for (int i = 0; i < n; ++i) row[i] = i;
        if (n >= 2) inst.paths.push_back({"bottom_row", row});
        corpus.push_back(std::move(inst));
    }

    for (int n = 3; n <= 6; ++n) {
        auto inst = make_instance("K2x" + std::to_string(n), "king", n, gen::king(2, n));
        inst.subsets.push_back({"Y=bottom_row", range_subset(0, n - 1), true});
        std::vector<int> row(n);
        for (int i = 0; i < n; ++i) row[i] = i;
        inst.paths.push_back({"bottom_row", row});
        corpus.push_back(std::move(inst));
    }

    for (int k = 1; k <= 3; ++k) {
        auto inst = make_instance("S3x" + std::to_string(k), "star", k, gen::star_subdiv(3, k));
        auto geo = first_geodesic(inst.space, k, 2 * k);
        inst.subsets.push_back({"Y=arm_geodesic", Subset::of(geo), true});
        inst.paths.push_back({"arm_geodesic", geo});
        corpus.push_back(std::move(inst));
    }

    for (int s = 4; s <= 10; ++s) {
        auto inst = make_instance("Cat" + std::to_string(s), "caterpillar", s,
                                  gen::caterpillar(s, 2));
        inst.subsets.push_back({"Y=spine", range_subset(0, s - 1), true});
        std::vector<int> spine(s);
        for (int i = 0; i < s; ++i) spine[i] = i;
        inst.paths.push_back({"spine", spine});
        corpus.push_back(std::move(inst));
    }

    // Hulls of every base instance small enough.
    const std::size_t base_count = corpus.size();
    for (std::size_t i = 0; i < base_count; ++i) {
        auto& base = corpus[i];
        if (base.space.n() > config.max_hull_base) continue;
        base.hull = std::make_shared<HullGraph>(hull_graph(base.space, config.hull_budget));

        CorpusInstance inst;
        inst.id = base.id + "~hull";
        inst.family = base.family + "_hull";
        inst.family_param = base.family_param;
        inst.graph = base.hull->graph;
        inst.space = base.hull->metric;
        inst.helly = true;
        inst.tree = base.tree && base.hull->forms.size() == static_cast<std::size_t>(base.space.n());
        inst.is_hull = true;
        for (const auto& sub : base.subsets) {
            std::vector<int> mapped;
            for (int p : sub.set.members) mapped.push_back(base.hull->embedding[p]);
            inst.subsets.push_back({sub.label, Subset::of(std::move(mapped)), sub.contracting});
        }
        for (const auto& path : base.paths) {
            std::vector<int> mapped;
            for (int p : path.points) mapped.push_back(base.hull->embedding[p]);
            inst.paths.push_back({path.label, std::move(mapped)});
        }
        corpus.push_back(std::move(inst));
    }
    return corpus;
}

namespace {

SuiteResult make_result(std::string suite, const CorpusInstance& inst, std::string label = "") {
    SuiteResult r;
    r.suite = std::move(suite);
    r.instance = label.empty() ? inst.id : inst.id + "/" + label;
    return r;
}

void track_min_slack(SuiteResult& r, Scaled margin, Witness w) {
    static_cast<void>(w);
    if (margin < r.slack) r.slack = margin;
}

void fail_with(SuiteResult& r, Scaled margin, Witness w) {
    r.status = SuiteStatus::Fail;
    if (margin < r.slack) r.slack = margin;
    if (r.witnesses.size() < 8) r.witnesses.push_back(std::move(w));
}

void check(SuiteResult& r, Scaled margin, const Witness& w) {
    if (margin < r.slack) r.slack = margin;
    if (margin < 0) {
        r.status = SuiteStatus::Fail;
        if (r.witnesses.size() < 8) r.witnesses.push_back(w);
    }
}

// Distance from a point to the vertex set of a path.
Scaled dist_to_points(const FiniteMetricSpace& X, int p, const std::vector<int>& pts) {
    Scaled best = -1;
    for (int q : pts) {
        Scaled v = X.d(p, q);
        if (best < 0 || v < best) best = v;
    }
    return best;
}

}  // namespace

std::vector<SuiteResult> suite_projection_geodesic(const Corpus& corpus,
                                                   const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& inst : corpus) {
        const auto& X = inst.space;
        const Scaled slack = cfg.slack * X.scale();
        for (const auto& sub : inst.subsets) {
            auto r = make_result("projection_geodesic", inst, sub.label);
            r.slack = X.diameter();
            std::uint64_t checks = 0;
            for (int x = 0; x < X.n(); ++x) {
                auto proj = coarse_projection(X, sub.set, x, slack);
                for (int y : proj.members) {
                    auto geos = enumerate_geodesics(X, x, y, cfg.enum_budget);
                    if (!geos.complete) r.note = "geodesic budget exhausted";
                    for (const auto& geo : geos.paths) {
                        for (int p : geo.points) {
                            ++checks;
                            Scaled margin = X.d(p, sub.set) + slack - X.d(p, y);
                            check(r, margin, Witness{"ProjGeodesic", {x, y, p}, {margin}});
                        }
                    }
                }
            }
            r.measured["checks"] = static_cast<Scaled>(checks);
            if (checks == 0) r.status = SuiteStatus::Vacuous;
            if (!r.note.empty() && r.status == SuiteStatus::Pass) r.status = SuiteStatus::Vacuous;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteResult> suite_concatenation(const Corpus& corpus, const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    constexpr std::size_t kMaxBetas = 10;
    for (const auto& inst : corpus) {
        const auto& X = inst.space;
        for (const auto& dp : inst.paths) {
            if (dp.points.size() < 2) continue;
            auto r = make_result("concatenation", inst, dp.label);
            r.slack = 1;
            const int a = dp.points.front();
            const int b = dp.points.back();
            if (a == b) {
                r.status = SuiteStatus::Vacuous;
                out.push_back(std::move(r));
                continue;
            }
            // Sampled betas: geodesics and (2,0)-quasi-geodesics, lexicographically first.
            std::vector<std::pair<std::vector<int>, int>> betas;  // (points, q)
            auto geos = enumerate_geodesics(X, a, b, cfg.enum_budget);
            for (std::size_t i = 0; i < geos.paths.size() && i < kMaxBetas; ++i) {
                betas.emplace_back(geos.paths[i].points, 1);
            }
            auto qgs = enumerate_quasi_geodesics(X, a, b, Rat{2, 1}, Rat{0, 1}, cfg.enum_budget);
            for (std::size_t i = 0; i < qgs.paths.size() && i < kMaxBetas; ++i) {
                betas.emplace_back(qgs.paths[i].points, 2);
            }
            std::uint64_t checks = 0;
            for (const auto& [beta, q] : betas) {
                const int len = static_cast<int>(beta.size());
                const int stride = std::max(1, len / 6);
                for (int x = 0; x < X.n(); ++x) {
                    Scaled dbeta = dist_to_points(X, x, beta);
                    for (int iy = 0; iy < len; ++iy) {
                        if (X.d(x, beta[iy]) != dbeta) continue;
                        auto head = first_geodesic(X, x, beta[iy]);
                        for (int iz = 0; iz < len; iz += stride) {
                            std::vector<int> concat = head;
                            int step = (iz >= iy) ? 1 : -1;
                            for (int i = iy + step; step > 0 ? i <= iz : i >= iz; i += step) {
                                concat.push_back(beta[i]);
                            }
                            DiscretePath path{concat, Rat{3 * q, 1}, Rat{2, 1}};
                            ++checks;
                            auto qc = is_quasi_geodesic(X, path);
                            if (!qc.ok) {
                                fail_with(r, -1,
                                          Witness{"ConcatNotQuasiGeodesic",
                                                  {x, beta[iy], beta[iz], qc.violation->first,
                                                   qc.violation->second},
                                                  {}});
                            }
                        }
                    }
                }
            }
            r.measured["checks"] = static_cast<Scaled>(checks);
            if (checks == 0) r.status = SuiteStatus::Vacuous;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteResult> suite_one_geodesic(const Corpus& corpus, const VerifyConfig& cfg,
                                            bool helly_only) {
    std::vector<SuiteResult> out;
    for (const auto& inst : corpus) {
        if (helly_only && !inst.helly) continue;
        const auto& X = inst.space;
        const Scaled s = X.scale();
        const Scaled slack = cfg.slack * s;
        for (const auto& sub : inst.subsets) {
            auto r = make_result("one_geodesic", inst, sub.label);
            r.slack = X.diameter();
            auto m1 = morse_constant(X, sub.set, Rat{1, 1}, Rat{0, 1}, cfg.morse_budget);
            r.measured["M_1_0"] = m1.constant;
            if (!m1.exact) {
                r.status = SuiteStatus::Vacuous;
                r.note = "morse budget exhausted";
                out.push_back(std::move(r));
                continue;
            }
            for (int x = 0; x < X.n(); ++x) {
                auto proj = coarse_projection(X, sub.set, x, slack);
                for (int y : proj.members) {
                    for (int z : sub.set.members) {
                        Scaled margin = X.d(x, z) - X.d(x, y) - X.d(y, z) + 2 * m1.constant +
                                        2 * s + cfg.tol * s;
                        check(r, margin, Witness{"OneGeodesic", {x, y, z}, {margin}});
                    }
                }
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteResult> suite_all_geodesics(const Corpus& corpus, const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& inst : corpus) {
        if (!inst.helly) continue;
        const auto& X = inst.space;
        const Scaled s = X.scale();
        const Scaled slack = cfg.slack * s;
        for (const auto& sub : inst.subsets) {
            auto r = make_result("all_geodesics", inst, sub.label);
            // Measure C_meas = max d(y, alpha) over x, y in pi(x), z in Y,
            // geodesics alpha from x to z.
            Scaled c_meas = 0;
            for (int x = 0; x < X.n(); ++x) {
                auto proj = coarse_projection(X, sub.set, x, slack);
                for (int z : sub.set.members) {
                    auto geos = enumerate_geodesics(X, x, z, cfg.enum_budget);
                    if (!geos.complete) r.note = "geodesic budget exhausted";
                    for (int y : proj.members) {
                        for (const auto& alpha : geos.paths) {
                            c_meas = std::max(c_meas, dist_to_points(X, y, alpha.points));
                        }
                    }
                }
            }
            r.measured["C_meas"] = c_meas;
            auto m1 = morse_constant(X, sub.set, Rat{1, 1}, Rat{0, 1}, cfg.morse_budget);
            r.measured["M_1_0"] = m1.constant;
            Scaled bound = 2 * m1.constant + 2 * s + cfg.tol * s;  // with M(9,0) >= 0
            if (m1.exact && c_meas <= bound) {
                r.slack = bound - c_meas;
                r.note = "passed without M(9,0)";
                out.push_back(std::move(r));
                continue;
            }
            auto m9 = morse_constant(X, sub.set, Rat{9, 1}, Rat{0, 1}, cfg.morse_budget);
            r.measured["M_9_0"] = m9.constant;
            bound = 2 * m9.constant + 2 * m1.constant + 2 * s + cfg.tol * s;
            r.slack = bound - c_meas;
            if (c_meas <= bound) {
                // Sound even when the morse budgets ran out: the true bound is larger.
            } else if (!m9.exact || !m1.exact) {
                r.status = SuiteStatus::Vacuous;
                r.note = "morse budget exhausted";
            } else {
                fail_with(r, r.slack, Witness{"AllGeodesics", {}, {c_meas, bound}});
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteResult> suite_morse_iff_contracting(const Corpus& corpus,
                                                     const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& inst : corpus) {
        if (!inst.helly) continue;
        const auto& X = inst.space;
        const Scaled s = X.scale();
        const Scaled slack = cfg.slack * s;
        for (const auto& sub : inst.subsets) {
            auto r = make_result("morse_iff_contracting", inst, sub.label);
            auto contraction = contraction_constant(X, sub.set, slack);
            r.measured["D"] = contraction.constant;
            auto m1 = morse_constant(X, sub.set, Rat{1, 1}, Rat{0, 1}, cfg.morse_budget);
            auto m9 = morse_constant(X, sub.set, Rat{9, 1}, Rat{0, 1}, cfg.morse_budget);
            r.measured["M_1_0"] = m1.constant;
            r.measured["K_9_0"] = m9.constant;
            r.measured["K_9_0_exact"] = m9.exact ? 1 : 0;
            Scaled bound = 6 * (2 * m9.constant + 2 * m1.constant + 2 * s) + 12 * s;
            r.slack = bound - contraction.constant;
            if (contraction.constant <= bound) {
                // Sound with budget-limited lower bounds for K9/M1.
            } else if (!m9.exact || !m1.exact) {
                r.status = SuiteStatus::Vacuous;
                r.note = "morse budget exhausted";
            } else {
                fail_with(r, r.slack,
                          Witness{"MainTheoremBound",
                                  {contraction.witness_ball.center, contraction.witness_pair.first,
                                   contraction.witness_pair.second},
                                  {contraction.constant, bound}});
            }
            if (contraction.vacuous) r.status = SuiteStatus::Vacuous;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteResult> suite_bounded_jumps(const Corpus& corpus, const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    constexpr std::size_t kMaxGeodesics = 20;
    for (const auto& inst : corpus) {
        const auto& X = inst.space;
        const Scaled s = X.scale();
        const Scaled slack = cfg.slack * s;
        for (const auto& dp : inst.paths) {
            if (dp.points.size() < 3) continue;
            auto r = make_result("bounded_jumps", inst, dp.label);
            const int mid = static_cast<int>(dp.points.size()) / 2;
            DiscretePath gamma1{{dp.points.begin(), dp.points.begin() + mid + 1}, Rat{3, 1},
                                Rat{2, 1}};
            DiscretePath gamma2{{dp.points.begin() + mid, dp.points.end()}, Rat{3, 1}, Rat{2, 1}};
            Scaled D = std::max(
                contraction_constant(X, Subset::of(gamma1.points), slack).constant,
                contraction_constant(X, Subset::of(gamma2.points), slack).constant);
            // Measured neighborhood constant: geodesics between path points
            // stay within B of the subpath between them.
            Scaled B = 0;
            const int len = static_cast<int>(dp.points.size());
            for (int i = 0; i < len; ++i) {
                for (int j = i + 1; j < len; ++j) {
                    auto geos = enumerate_geodesics(X, dp.points[i], dp.points[j], cfg.enum_budget);
                    std::vector<int> sub(dp.points.begin() + i, dp.points.begin() + j + 1);
                    for (std::size_t k = 0; k < geos.paths.size() && k < kMaxGeodesics; ++k) {
                        for (int p : sub) {
                            B = std::max(B, dist_to_points(X, p, geos.paths[k].points));
                        }
                    }
                }
            }
            const Scaled Dprime = D + B + cfg.tol * s;
            r.measured["D"] = D;
            r.measured["B_meas"] = B;
            r.measured["D_prime"] = Dprime;
            int vacuous_count = 0;
            for (int x = 0; x < X.n(); ++x) {
                auto res = bounded_jump_check(X, gamma1, gamma2, x, Dprime, slack);
                if (res.vacuous) ++vacuous_count;
                if (!res.ok) {
                    fail_with(r, -1, *res.witness);
                }
            }
            r.measured["vacuous_points"] = vacuous_count;
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<SuiteResult> suite_local_to_global(const Corpus& corpus, const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& inst : corpus) {
        const auto& X = inst.space;
        const Scaled s = X.scale();
        const Scaled slack = cfg.slack * s;
        for (const auto& dp : inst.paths) {
            if (dp.points.size() < 2) continue;
            auto r = make_result("local_to_global", inst, dp.label);
            const int len = static_cast<int>(dp.points.size()) - 1;
            DiscretePath path{dp.points, Rat{3, 1}, Rat{2, 1}};

            // Window contraction constants; D_L is their running max over
            // windows of parameter length <= L.
            std::map<std::vector<int>, Scaled> cache;
            std::vector<Scaled> window_max(len + 1, 0);
            bool windows_ok = true;
            for (int L = 1; L <= len && windows_ok; ++L) {
                window_max[L] = window_max[L - 1];
                for (int start = 0; start + L <= len; ++start) {
                    DiscretePath window;
                    window.points.assign(dp.points.begin() + start,
                                         dp.points.begin() + start + L + 1);
                    window.lambda = Rat{3, 1};
                    window.eps = Rat{2, 1};
                    if (!is_quasi_geodesic(X, window).ok) {
                        windows_ok = false;
                        break;
                    }
                    auto key = Subset::of(window.points).members;
                    auto it = cache.find(key);
                    Scaled c;
                    if (it != cache.end()) {
                        c = it->second;
                    } else {
                        c = contraction_constant(X, Subset{key}, slack).constant;
                        cache.emplace(std::move(key), c);
                    }
                    window_max[L] = std::max(window_max[L], c);
                }
            }
            if (!windows_ok) {
                r.status = SuiteStatus::Vacuous;
                r.note = "not locally quasi-geodesic at (3,2)";
                out.push_back(std::move(r));
                continue;
            }
            const Scaled global_D =
                contraction_constant(X, Subset::of(dp.points), slack).constant;
            // Smallest additive constant making the whole path a (1,c')-quasi-geodesic.
            Scaled c_global = 0;
            for (int i = 0; i <= len; ++i) {
                for (int j = i + 1; j <= len; ++j) {
                    c_global = std::max(c_global,
                                        (j - i) * s - X.d(dp.points[i], dp.points[j]));
                }
            }
            int threshold = -1;
            for (int L = 1; L <= len; ++L) {
                if (global_D <= window_max[L] + cfg.tol * s) {
                    bool monotone = true;
                    for (int L2 = L; L2 <= len; ++L2) {
                        if (global_D > window_max[L2] + cfg.tol * s) monotone = false;
                    }
                    if (monotone) {
                        threshold = L;
                        break;
                    }
                }
            }
            r.measured["L_star"] = threshold;
            r.measured["D_global"] = global_D;
            r.measured["c_prime"] = c_global;
            if (threshold < 0) {
                fail_with(r, -1, Witness{"NoLocalThreshold", {}, {global_D, window_max[len]}});
            } else {
                r.slack = window_max[threshold] + cfg.tol * s - global_D;
            }
            out.push_back(std::move(r));
        }
    }
    return out;
}

namespace {

struct HullSubset {
    const CorpusInstance* inst;
    const DesignatedSubset* sub;
    Subset embedded;  // indices of e(A) in the hull
};

std::vector<HullSubset> hull_subsets(const Corpus& corpus) {
    std::vector<HullSubset> out;
    for (const auto& inst : corpus) {
        if (!inst.hull) continue;
        for (const auto& sub : inst.subsets) {
            if (sub.label == "Y=all") continue;
            std::vector<int> mapped;
            for (int p : sub.set.members) mapped.push_back(inst.hull->embedding[p]);
            out.push_back({&inst, &sub, Subset::of(std::move(mapped))});
        }
    }
    return out;
}

// Max over geodesics in the hull between points of e(A) of the distance of
// their points to e(A).
Scaled hull_quasiconvexity_constant(const HullGraph& hull, const Subset& eA,
                                    std::uint64_t budget) {
    Scaled worst = 0;
    for (std::size_t i = 0; i < eA.size(); ++i) {
        for (std::size_t j = i + 1; j < eA.size(); ++j) {
            auto geos = enumerate_geodesics(hull.metric, eA.members[i], eA.members[j], budget);
            for (const auto& geo : geos.paths) {
                for (int f : geo.points) {
                    worst = std::max(worst, hull.metric.d(f, eA));
                }
            }
        }
    }
    return worst;
}

void family_constancy(std::vector<SuiteResult>& out, const std::string& suite,
                      const std::map<std::string, std::vector<Scaled>>& by_family,
                      const std::set<std::string>& hard_families, const std::string& key) {
    for (const auto& [family, values] : by_family) {
        if (values.size() < 2) continue;
        SuiteResult r;
        r.suite = suite;
        r.instance = "family:" + family;
        Scaled lo = *std::min_element(values.begin(), values.end());
        Scaled hi = *std::max_element(values.begin(), values.end());
        r.measured[key + "_min"] = lo;
        r.measured[key + "_max"] = hi;
        if (hard_families.count(family)) {
            r.slack = lo - hi;  // 0 iff constant
            if (hi != lo) {
                r.status = SuiteStatus::Fail;
                r.witnesses.push_back(Witness{"FamilyNotConstant", {}, {lo, hi}});
            }
        } else {
            r.note = "recorded";
        }
        out.push_back(std::move(r));
    }
}

}  // namespace

std::vector<SuiteResult> suite_hull_quasiconvexity(const Corpus& corpus,
                                                   const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    std::map<std::string, std::vector<Scaled>> by_family;
    for (const auto& hs : hull_subsets(corpus)) {
        const auto& inst = *hs.inst;
        const auto& X = inst.space;
        const Scaled slack = cfg.slack * X.scale();
        auto r = make_result("hull_quasiconvexity", inst, hs.sub->label);
        Scaled C = contraction_constant(X, hs.sub->set, slack).constant;
        if (hs.sub->set.size() >= 4) {
            C = std::max(C, gromov_delta(X, hs.sub->set).delta);
        }
        Scaled D = hull_quasiconvexity_constant(*inst.hull, hs.embedded, cfg.enum_budget);
        r.measured["C"] = C;
        r.measured["D_meas"] = D;
        if (inst.tree && D != 0) {
            fail_with(r, -D, Witness{"TreeHullNotConvex", {}, {D}});
        }
        if (hs.sub->contracting) by_family[inst.family].push_back(D);
        out.push_back(std::move(r));
    }
    family_constancy(out, "hull_quasiconvexity", by_family, {"star", "caterpillar"}, "D_meas");
    return out;
}

std::vector<SuiteResult> suite_hull_reverse_triangle(const Corpus& corpus,
                                                     const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    // The lemma's input constant C bounds both the contraction constant of A
    // and its 4-point constant; the family-level max feeds the bound.
    std::map<std::string, Scaled> family_C;
    auto subsets = hull_subsets(corpus);
    for (const auto& hs : subsets) {
        const auto& X = hs.inst->space;
        Scaled C = contraction_constant(X, hs.sub->set, cfg.slack * X.scale()).constant;
        if (hs.sub->set.size() >= 4) {
            C = std::max(C, gromov_delta(X, hs.sub->set).delta);
        }
        auto& slot = family_C[hs.inst->family];
        slot = std::max(slot, C);
    }
    for (const auto& hs : subsets) {
        const auto& inst = *hs.inst;
        const auto& hull = *inst.hull;
        const Scaled s = hull.metric.scale();
        const Scaled slack = cfg.slack * s;
        auto r = make_result("hull_reverse_triangle", inst, hs.sub->label);
        r.slack = hull.metric.diameter();
        const Scaled bound = 2 * family_C[inst.family] + 2 * slack + cfg.tol * s;
        Scaled worst_defect = 0;
        for (int x = 0; x < hull.metric.n(); ++x) {
            auto proj = coarse_projection(hull.metric, hs.embedded, x, slack);
            for (int a : proj.members) {
                for (int b : hs.embedded.members) {
                    Scaled defect =
                        hull.metric.d(x, a) + hull.metric.d(a, b) - hull.metric.d(x, b);
                    worst_defect = std::max(worst_defect, defect);
                    Scaled margin = bound - defect;
                    check(r, margin, Witness{"ReverseTriangle", {x, a, b}, {defect, bound}});
                }
            }
        }
        r.measured["defect_max"] = worst_defect;
        r.measured["bound"] = bound;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SuiteResult> suite_hull_geodesics_near_projection(const Corpus& corpus,
                                                              const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    constexpr std::size_t kMaxGeodesics = 30;
    std::map<std::string, std::vector<Scaled>> by_family;
    for (const auto& hs : hull_subsets(corpus)) {
        const auto& inst = *hs.inst;
        const auto& hull = *inst.hull;
        const Scaled s = hull.metric.scale();
        const Scaled slack = cfg.slack * s;
        auto r = make_result("hull_geodesics_near_projection", inst, hs.sub->label);
        Scaled D = 0;
        for (int f = 0; f < hull.metric.n(); ++f) {
            auto proj = coarse_projection(hull.metric, hs.embedded, f, slack);
            for (int b : hs.embedded.members) {
                auto geos = enumerate_geodesics(hull.metric, f, b, cfg.enum_budget);
                for (std::size_t k = 0; k < geos.paths.size() && k < kMaxGeodesics; ++k) {
                    for (int a : proj.members) {
                        D = std::max(D, dist_to_points(hull.metric, a, geos.paths[k].points));
                    }
                }
            }
        }
        r.measured["D_meas"] = D;
        if (inst.tree && D > cfg.tol * s) {
            fail_with(r, cfg.tol * s - D, Witness{"TreeProjectionMiss", {}, {D}});
        }
        if (hs.sub->contracting) by_family[inst.family].push_back(D);
        out.push_back(std::move(r));
    }
    family_constancy(out, "hull_geodesics_near_projection", by_family, {"star"}, "D_meas");
    return out;
}

std::vector<SuiteResult> suite_persistence(const Corpus& corpus, const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    std::map<std::string, std::vector<Scaled>> by_family;
    for (const auto& hs : hull_subsets(corpus)) {
        const auto& inst = *hs.inst;
        const auto& X = inst.space;
        const auto& hull = *inst.hull;
        const Scaled slack = cfg.slack * X.scale();
        auto r = make_result("persistence", inst, hs.sub->label);
        if (!hs.sub->contracting) {
            r.status = SuiteStatus::Vacuous;
            r.note = "subset not designated contracting";
            out.push_back(std::move(r));
            continue;
        }
        const Scaled d_base = contraction_constant(X, hs.sub->set, slack).constant;
        const Scaled d_hull =
            contraction_constant(hull.metric, hs.embedded, cfg.slack * hull.metric.scale())
                .constant;
        r.measured["D_base"] = d_base;
        r.measured["D_hull"] = d_hull;
        if (inst.tree && d_hull != d_base) {
            fail_with(r, -1, Witness{"TreePersistenceMismatch", {}, {d_base, d_hull}});
        }
        // Adding-points cross-check: Y + two points still has bounded delta.
        Scaled delta_added = 0;
        for (int x = 0; x < X.n(); ++x) {
            for (int y = x; y < X.n(); ++y) {
                std::vector<int> pts = hs.sub->set.members;
                pts.push_back(x);
                pts.push_back(y);
                auto S = Subset::of(std::move(pts));
                if (S.size() < 4) continue;
                delta_added =
                    std::max(delta_added, delta_with_added_points(X, hs.sub->set, x, y).delta);
            }
        }
        r.measured["delta_added"] = delta_added;
        // Reverse-triangle consequence of strong contraction: minimal C' with
        // d(x',y') >= C'  =>  d(x,y) >= d(x,x') + d(x',y') + d(y',y) - C'.
        Scaled c_prime = 0;
        for (int x = 0; x < X.n(); ++x) {
            auto px = coarse_projection(X, hs.sub->set, x, slack);
            for (int y = 0; y < X.n(); ++y) {
                auto py = coarse_projection(X, hs.sub->set, y, slack);
                for (int xp : px.members) {
                    for (int yp : py.members) {
                        Scaled sum = X.d(x, xp) + X.d(xp, yp) + X.d(yp, y);
                        Scaled needed =
                            std::min(X.d(xp, yp) + X.scale(), std::max<Scaled>(0, sum - X.d(x, y)));
                        c_prime = std::max(c_prime, needed);
                    }
                }
            }
        }
        r.measured["C_prime"] = c_prime;
        by_family[inst.family].push_back(d_hull);
        out.push_back(std::move(r));
    }
    family_constancy(out, "persistence", by_family, {"caterpillar"}, "D_hull");
    return out;
}

std::vector<SuiteResult> suite_density(const Corpus& corpus, const VerifyConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& inst : corpus) {
        if (!inst.hull) continue;
        const auto& X = inst.space;
        const auto& hull = *inst.hull;
        const Scaled s = X.scale();
        auto r = make_result("density", inst);
        Scaled h = 0;
        for (const auto& form : hull.forms) {
            Scaled nearest = -1;
            for (int x = 0; x < X.n(); ++x) {
                Scaled v = dinf(form, kuratowski(X, x));
                if (nearest < 0 || v < nearest) nearest = v;
            }
            h = std::max(h, nearest);
        }
        Scaled delta = 0;
        if (X.n() >= 4) delta = gromov_delta(X).delta;
        r.measured["h"] = h;
        r.measured["delta"] = delta;
        if (inst.tree) {
            if (h != 0) fail_with(r, -h, Witness{"TreeDensity", {}, {h}});
        } else if (inst.family == "cycle") {
            Scaled margin = delta + cfg.tol * s - h;
            check(r, margin, Witness{"CycleDensity", {}, {h, delta}});
        } else {
            r.note = "recorded";
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"projection_geodesic",
            "concatenation",
            "one_geodesic",
            "all_geodesics",
            "morse_iff_contracting",
            "bounded_jumps",
            "local_to_global",
            "hull_quasiconvexity",
            "hull_reverse_triangle",
            "hull_geodesics_near_projection",
            "persistence",
            "density"};
}

Report run_all(const Corpus& corpus, const VerifyConfig& cfg,
               const std::vector<std::string>& suites) {
    auto wanted = [&](const std::string& name) {
        return suites.empty() || std::find(suites.begin(), suites.end(), name) != suites.end();
    };
    for (const auto& name : suites) {
        auto all = suite_names();
        if (std::find(all.begin(), all.end(), name) == all.end()) {
            throw MetricError("unknown suite: " + name, Witness{"UnknownSuite", {}, {}});
        }
    }
    Report report;
    auto append = [&](std::vector<SuiteResult> results) {
        for (auto& r : results) {
            if (r.status == SuiteStatus::Fail) report.pass = false;
            report.results.push_back(std::move(r));
        }
    };
    if (wanted("projection_geodesic")) append(suite_projection_geodesic(corpus, cfg));
    if (wanted("concatenation")) append(suite_concatenation(corpus, cfg));
    if (wanted("one_geodesic")) append(suite_one_geodesic(corpus, cfg));
    if (wanted("all_geodesics")) append(suite_all_geodesics(corpus, cfg));
    if (wanted("morse_iff_contracting")) append(suite_morse_iff_contracting(corpus, cfg));
    if (wanted("bounded_jumps")) append(suite_bounded_jumps(corpus, cfg));
    if (wanted("local_to_global")) append(suite_local_to_global(corpus, cfg));
    if (wanted("hull_quasiconvexity")) append(suite_hull_quasiconvexity(corpus, cfg));
    if (wanted("hull_reverse_triangle")) append(suite_hull_reverse_triangle(corpus, cfg));
    if (wanted("hull_geodesics_near_projection")) {
        append(suite_hull_geodesics_near_projection(corpus, cfg));
    }
    if (wanted("persistence")) append(suite_persistence(corpus, cfg));
    if (wanted("density")) append(suite_density(corpus, cfg));
    return report;
}

Json to_json(const SuiteResult& r) {
    Json j;
    j["suite"] = r.suite;
    j["instance"] = r.instance;
    Json measured = Json::object();
    for (const auto& [k, v] : r.measured) measured[k] = v;
    j["measured"] = measured;
    j["slack"] = r.slack;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) witnesses.push_back(to_json(w));
    j["witnesses"] = witnesses;
    j["status"] = r.status == SuiteStatus::Pass     ? "pass"
                  : r.status == SuiteStatus::Fail   ? "fail"
                                                    : "vacuous";
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

Json to_json(const Report& report) {
    Json j;
    Json results = Json::array();
    std::map<std::string, std::array<int, 3>> counts;
    Json density_records = Json::array();
    Json contraction_records = Json::array();
    for (const auto& r : report.results) {
        results.push_back(to_json(r));
        auto& c = counts[r.suite];
        c[r.status == SuiteStatus::Pass ? 0 : r.status == SuiteStatus::Fail ? 1 : 2]++;
        if (r.suite == "density" && r.measured.count("delta")) {
            density_records.push_back(
                {{"instance", r.instance},
                 {"delta", r.measured.at("delta")},
                 {"h", r.measured.at("h")}});
        }
        if (r.suite == "morse_iff_contracting" && r.measured.count("D")) {
            contraction_records.push_back({{"instance", r.instance},
                                           {"D", r.measured.at("D")},
                                           {"K_9_0", r.measured.at("K_9_0")}});
        }
    }
    Json summary = Json::object();
    for (const auto& [suite, c] : counts) {
        summary[suite] = {{"pass", c[0]}, {"fail", c[1]}, {"vacuous", c[2]}};
    }
    j["pass"] = report.pass;
    j["summary"] = summary;
    j["records"] = {{"density", density_records}, {"contraction_morse", contraction_records}};
    j["results"] = results;
    return j;
}

}  // namespace coarse
