#ifndef SOFTDITO_ORACLE_GENERATORS_HPP
#define SOFTDITO_ORACLE_GENERATORS_HPP

#include <functional>

#include "catalog.hpp"

// Instance generators. Each walks the catalog in canonical order (contexts
// smallest first, then families, maps, points and soft sets in their
// enumeration order) and stops as soon as the recorder asks it to.
namespace softdito::oracle::gen {

using Search = std::function<void(Catalog&, Recorder&)>;

enum class Side { tau, kappa };

namespace detail {

/// Calls fn on every n-tuple of `pool` in lexicographic order until fn returns false.
template<typename T_, typename Fn_>
bool tuples(const std::vector<T_>& pool, std::size_t n, std::vector<T_>& acc, Fn_& fn) {
    if (acc.size() == n) {
        return fn(acc);
    }
    for (const auto& x : pool) {
        acc.push_back(x);
        const bool go = tuples(pool, n, acc, fn);
        acc.pop_back();
        if (!go) {
            return false;
        }
    }
    return true;
}

template<typename Fn_>
bool each_tuple(const std::vector<SoftSet>& pool, std::size_t n, Fn_ fn) {
    std::vector<SoftSet> acc;
    return tuples(pool, n, acc, fn);
}

inline std::size_t family_count(Catalog& cat, std::size_t c, Side s) {
    return s == Side::tau ? cat.topologies(c).size() : cat.cotopologies(c).size();
}

inline void add_family(Instance& inst, Catalog& cat, std::size_t c, std::size_t i, Side s) {
    if (s == Side::tau) {
        inst.topologies.push_back(cat.topologies(c)[i]);
    } else {
        inst.cotopologies.push_back(cat.cotopologies(c)[i]);
    }
}

} // namespace detail

/// n-tuples of soft sets over one context.
inline Search sets(std::size_t n) {
    return [n](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            const bool go = detail::each_tuple(cat.sets(c), n, [&](const std::vector<SoftSet>& t) {
                Instance inst;
                inst.sets = t;
                return rec.visit(inst);
            });
            if (!go) {
                return;
            }
        }
    };
}

/// A soft point together with n soft sets of its context.
inline Search points_and_sets(std::size_t n) {
    return [n](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            for (const auto& p : cat.points(c)) {
                const bool go = detail::each_tuple(cat.sets(c), n, [&](const std::vector<SoftSet>& t) {
                    Instance inst;
                    inst.points = {p};
                    inst.sets = t;
                    return rec.visit(inst);
                });
                if (!go) {
                    return;
                }
            }
        }
    };
}

/// One (co)topology, optionally each soft point, and n soft sets.
inline Search family(Side s, std::size_t n, bool with_point = false) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            for (std::size_t i = 0; i < detail::family_count(cat, c, s); ++i) {
                const auto run = [&](const std::vector<SoftPoint>& pts) {
                    return detail::each_tuple(cat.sets(c), n, [&](const std::vector<SoftSet>& t) {
                        Instance inst;
                        detail::add_family(inst, cat, c, i, s);
                        inst.points = pts;
                        inst.sets = t;
                        return rec.visit(inst);
                    });
                };
                if (!with_point) {
                    if (!run({})) {
                        return;
                    }
                    continue;
                }
                for (const auto& p : cat.points(c)) {
                    if (!run({p})) {
                        return;
                    }
                }
            }
        }
    };
}

/// One (co)topology under every axiom scope: all domains first, then each
/// fixed non-empty A in mask order.
inline Search family_scoped(Side s) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            const auto& ctx = cat.contexts()[c];
            std::vector<std::optional<ParamSet>> scopes{std::nullopt};
            for (auto a : nonempty_domains(*ctx)) {
                scopes.emplace_back(a);
            }
            for (std::size_t i = 0; i < detail::family_count(cat, c, s); ++i) {
                for (const auto& scope : scopes) {
                    Instance inst;
                    detail::add_family(inst, cat, c, i, s);
                    if (scope) {
                        inst.scope = scope;
                        inst.scope_context = ctx;
                    }
                    if (!rec.visit(inst)) {
                        return;
                    }
                }
            }
        }
    };
}

/// Two (co)topologies on the same context.
inline Search family_pairs(Side s) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            const auto n = detail::family_count(cat, c, s);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    Instance inst;
                    detail::add_family(inst, cat, c, i, s);
                    detail::add_family(inst, cat, c, j, s);
                    if (!rec.visit(inst)) {
                        return;
                    }
                }
            }
        }
    };
}

/// A map f between two (co)topological spaces, optionally with each soft point of the source.
inline Search family_maps(Side s, bool with_point = false) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c1 = 0; c1 < cat.size(); ++c1) {
            for (std::size_t c2 = 0; c2 < cat.size(); ++c2) {
                for (std::size_t i = 0; i < detail::family_count(cat, c1, s); ++i) {
                    for (std::size_t j = 0; j < detail::family_count(cat, c2, s); ++j) {
                        for (const auto& f : cat.maps(c1, c2)) {
                            Instance inst;
                            detail::add_family(inst, cat, c1, i, s);
                            detail::add_family(inst, cat, c2, j, s);
                            inst.maps = {f};
                            if (!with_point) {
                                if (!rec.visit(inst)) {
                                    return;
                                }
                                continue;
                            }
                            for (const auto& p : cat.points(c1)) {
                                inst.points = {p};
                                if (!rec.visit(inst)) {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
        }
    };
}

/// Maps f : 1 -> 2 and g : 2 -> 3 between three (co)topological spaces.
inline Search family_compose(Side s) {
    return [=](Catalog& cat, Recorder& rec) {
        const auto n = cat.size();
        for (std::size_t c1 = 0; c1 < n; ++c1) {
            for (std::size_t c2 = 0; c2 < n; ++c2) {
                for (std::size_t c3 = 0; c3 < n; ++c3) {
                    for (std::size_t i = 0; i < detail::family_count(cat, c1, s); ++i) {
                        for (std::size_t j = 0; j < detail::family_count(cat, c2, s); ++j) {
                            for (std::size_t k = 0; k < detail::family_count(cat, c3, s); ++k) {
                                for (const auto& f : cat.maps(c1, c2)) {
                                    for (const auto& g : cat.maps(c2, c3)) {
                                        Instance inst;
                                        detail::add_family(inst, cat, c1, i, s);
                                        detail::add_family(inst, cat, c2, j, s);
                                        detail::add_family(inst, cat, c3, k, s);
                                        inst.maps = {f, g};
                                        if (!rec.visit(inst)) {
                                            return;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    };
}

/// A map with `ns` soft sets of its source followed by `nt` of its target.
inline Search maps(std::size_t ns, std::size_t nt) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c1 = 0; c1 < cat.size(); ++c1) {
            for (std::size_t c2 = 0; c2 < cat.size(); ++c2) {
                for (const auto& f : cat.maps(c1, c2)) {
                    const bool go = detail::each_tuple(cat.sets(c1), ns, [&](const std::vector<SoftSet>& src) {
                        return detail::each_tuple(cat.sets(c2), nt, [&](const std::vector<SoftSet>& tgt) {
                            Instance inst;
                            inst.maps = {f};
                            inst.sets = src;
                            inst.sets.insert(inst.sets.end(), tgt.begin(), tgt.end());
                            return rec.visit(inst);
                        });
                    });
                    if (!go) {
                        return;
                    }
                }
            }
        }
    };
}

/// Maps f : 1 -> 2, g : 2 -> 3 and one soft set of the third context.
inline Search map_chains() {
    return [](Catalog& cat, Recorder& rec) {
        const auto n = cat.size();
        for (std::size_t c1 = 0; c1 < n; ++c1) {
            for (std::size_t c2 = 0; c2 < n; ++c2) {
                for (std::size_t c3 = 0; c3 < n; ++c3) {
                    for (const auto& f : cat.maps(c1, c2)) {
                        for (const auto& g : cat.maps(c2, c3)) {
                            for (const auto& k : cat.sets(c3)) {
                                Instance inst;
                                inst.maps = {f, g};
                                inst.sets = {k};
                                if (!rec.visit(inst)) {
                                    return;
                                }
                            }
                        }
                    }
                }
            }
        }
    };
}

/// A ditopology (τ, κ) and n soft sets; with `scoped`, every axiom scope too.
inline Search dito(std::size_t n, bool scoped = false) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            const auto& ctx = cat.contexts()[c];
            std::vector<std::optional<ParamSet>> scopes{std::nullopt};
            if (scoped) {
                for (auto a : nonempty_domains(*ctx)) {
                    scopes.emplace_back(a);
                }
            }
            for (const auto& t : cat.topologies(c)) {
                for (const auto& k : cat.cotopologies(c)) {
                    for (const auto& scope : scopes) {
                        const bool go = detail::each_tuple(cat.sets(c), n, [&](const std::vector<SoftSet>& sets) {
                            Instance inst;
                            inst.topologies = {t};
                            inst.cotopologies = {k};
                            inst.sets = sets;
                            if (scope) {
                                inst.scope = scope;
                                inst.scope_context = ctx;
                            }
                            return rec.visit(inst);
                        });
                        if (!go) {
                            return;
                        }
                    }
                }
            }
        }
    };
}

/// Two ditopologies on the same context: topologies {τ1, τ2}, cotopologies {κ1, κ2}.
inline Search dito_pairs() {
    return [](Catalog& cat, Recorder& rec) {
        for (std::size_t c = 0; c < cat.size(); ++c) {
            const auto& ts = cat.topologies(c);
            const auto& ks = cat.cotopologies(c);
            for (const auto& t1 : ts) {
                for (const auto& k1 : ks) {
                    for (const auto& t2 : ts) {
                        for (const auto& k2 : ks) {
                            Instance inst;
                            inst.topologies = {t1, t2};
                            inst.cotopologies = {k1, k2};
                            if (!rec.visit(inst)) {
                                return;
                            }
                        }
                    }
                }
            }
        }
    };
}

/// A map between two ditopological spaces, optionally with each source soft point.
inline Search dito_maps(bool with_point = false) {
    return [=](Catalog& cat, Recorder& rec) {
        for (std::size_t c1 = 0; c1 < cat.size(); ++c1) {
            for (std::size_t c2 = 0; c2 < cat.size(); ++c2) {
                for (const auto& t1 : cat.topologies(c1)) {
                    for (const auto& k1 : cat.cotopologies(c1)) {
                        for (const auto& t2 : cat.topologies(c2)) {
                            for (const auto& k2 : cat.cotopologies(c2)) {
                                for (const auto& f : cat.maps(c1, c2)) {
                                    Instance inst;
                                    inst.topologies = {t1, t2};
                                    inst.cotopologies = {k1, k2};
                                    inst.maps = {f};
                                    if (!with_point) {
                                        if (!rec.visit(inst)) {
                                            return;
                                        }
                                        continue;
                                    }
                                    for (const auto& p : cat.points(c1)) {
                                        inst.points = {p};
                                        if (!rec.visit(inst)) {
                                            return;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    };
}

} // namespace softdito::oracle::gen

#endif
