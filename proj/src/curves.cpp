#include "gkz/curves.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

namespace gkz::curves {

using lattice::make_rat;

namespace {

void check_weights(const std::vector<Rat>& d) {
    if (d.size() < 3) throw DomainError("need at least three marked points");
    for (const Rat& x : d)
        if (x <= 0) throw DomainError("weights must be positive");
}

void check_subset(const Subset& s, int n) {
    int prev = 0;
    for (int i : s) {
        if (i <= prev || i > n) throw DomainError("subset must be sorted 1-based marks");
        prev = i;
    }
}

Rat subset_sum(const std::vector<Rat>& d, const Subset& s) {
    Rat acc = 0;
    for (int i : s) acc += d[std::size_t(i) - 1];
    return acc;
}

int sign_of(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

bool subset_contains(const Subset& outer, const Subset& inner) {
    return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

}  // namespace

Subset complement_subset(const Subset& s, int n) {
    Subset out;
    std::size_t k = 0;
    for (int i = 1; i <= n; ++i) {
        if (k < s.size() && s[k] == i) ++k;
        else out.push_back(i);
    }
    return out;
}

Subset canonical_form(const Subset& s, int n) {
    check_subset(s, n);
    Subset comp = complement_subset(s, n);
    if (s.size() < comp.size()) return s;
    if (comp.size() < s.size()) return comp;
    bool has_one = !s.empty() && s.front() == 1;
    return has_one ? s : comp;
}

bool is_canonical(const Subset& s, int n) { return canonical_form(s, n) == s; }

std::vector<Subset> canonical_subsets(int n) {
    std::vector<Subset> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        int pop = __builtin_popcount(mask);
        if (2 * pop > n) continue;
        if (2 * pop == n && !(mask & 1u)) continue;
        Subset s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out.push_back(std::move(s));
    }
    return out;
}

Rat hm_weight_pn(const std::vector<Rat>& d, const Subset& oriented) {
    check_subset(oriented, int(d.size()));
    Rat inside = subset_sum(d, oriented);
    Rat total = 0;
    for (const Rat& x : d) total += x;
    return (inside - (total - inside)) / 2;
}

bool is_empty_pn(const std::vector<Rat>& d) {
    check_weights(d);
    Rat total = 0;
    for (const Rat& x : d) total += x;
    for (const Rat& x : d)
        if (x > total - x) return true;
    return false;
}

bool is_semistable_pn(const std::vector<Rat>& d, const std::vector<Subset>& partition) {
    check_weights(d);
    std::vector<bool> seen(d.size(), false);
    for (const Subset& block : partition) {
        check_subset(block, int(d.size()));
        for (int i : block) {
            if (seen[std::size_t(i) - 1]) throw DomainError("partition blocks overlap");
            seen[std::size_t(i) - 1] = true;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw DomainError("partition does not cover all marks");
    for (const Subset& block : partition)
        if (hm_weight_pn(d, block) > 0) return false;
    return true;
}

std::vector<std::pair<Subset, int>> chamber_sign_pn(const std::vector<Rat>& d) {
    check_weights(d);
    std::vector<std::pair<Subset, int>> out;
    for (const Subset& s : canonical_subsets(int(d.size())))
        out.emplace_back(s, sign_of(hm_weight_pn(d, s)));
    return out;
}

namespace {

// One straight-segment crossing in the arrangement (possibly lifted by a
// fixed divisor part): the wall functionals are affine along the segment.
struct SegmentCrossing {
    Rat t_star;
    Subset oriented;  // the side whose weight increases
};

template <typename WeightFn>
bool segment_crossings(const std::vector<Subset>& walls, const WeightFn& weight_at,
                       const std::vector<Rat>& from, const std::vector<Rat>& to, int n,
                       std::vector<SegmentCrossing>& out) {
    out.clear();
    for (const Subset& I : walls) {
        Rat w0 = weight_at(from, I);
        Rat w1 = weight_at(to, I);
        if (w0 == 0 || w1 == 0) return false;  // endpoint on a wall
        if (sign_of(w0) == sign_of(w1)) continue;
        SegmentCrossing sc;
        sc.t_star = w0 / (w0 - w1);
        sc.oriented = w0 < 0 ? I : complement_subset(I, n);
        out.push_back(std::move(sc));
    }
    std::sort(out.begin(), out.end(),
              [](const SegmentCrossing& a, const SegmentCrossing& b) {
                  return a.t_star < b.t_star;
              });
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i].t_star == out[i + 1].t_star) return false;  // codimension two
    return true;
}

std::vector<Rat> insert_at(const std::vector<Rat>& reduced, int i0, const Rat& value) {
    std::vector<Rat> out;
    out.reserve(reduced.size() + 1);
    for (int i = 1; i <= int(reduced.size()) + 1; ++i) {
        if (i == i0) out.push_back(value);
        else out.push_back(reduced[std::size_t(i > i0 ? i - 2 : i - 1)]);
    }
    return out;
}

std::vector<Rat> drop_at(const std::vector<Rat>& d, int i0) {
    std::vector<Rat> out;
    for (int i = 1; i <= int(d.size()); ++i)
        if (i != i0) out.push_back(d[std::size_t(i) - 1]);
    return out;
}

bool interior_pn(const std::vector<Rat>& d) {
    for (const Subset& s : canonical_subsets(int(d.size())))
        if (hm_weight_pn(d, s) == 0) return false;
    return true;
}

constexpr int kReductionVariants = 6;

// Candidate (n-1)-weight vector for a boundary reduction, tilted along a
// rotated ternary ladder so all subset sums are distinct.
std::vector<Rat> reduced_candidate(const std::vector<Rat>& d, int i0, int variant) {
    std::vector<Rat> out;
    if (variant < 3) out = drop_at(d, i0);
    else out.assign(d.size() - 1, Rat(1));
    const std::size_t m = out.size();
    const std::size_t rot = std::size_t(variant) % 3;
    Rat total = 0;
    for (const Rat& x : out) total += x;
    Rat eta = total * make_rat(1, Int(100 * (variant + 1)));
    for (std::size_t k = 0; k < m; ++k) {
        Rat denom(1);
        for (std::size_t e = 0; e <= (k + rot) % m; ++e) denom *= 3;
        out[k] += eta / denom;
    }
    return out;
}

ParityCount count_impl(const std::vector<Rat>& d);

// One boundary reduction attempt; nullopt when the candidate is inadmissible.
std::optional<ParityCount> try_reduction(const std::vector<Rat>& d, int i0, int variant) {
    const int n = int(d.size());
    std::vector<Rat> reduced = reduced_candidate(d, i0, variant);
    if (!interior_pn(reduced) || is_empty_pn(reduced)) return std::nullopt;

    // Limit point with d_{i0} = 0: every wall functional must stay strict for
    // the face to be full-dimensional.
    std::vector<Rat> limit = insert_at(reduced, i0, Rat(0));
    auto walls = canonical_subsets(n);
    Rat min_abs;
    bool first = true;
    for (const Subset& I : walls) {
        Rat w = hm_weight_pn(limit, I);
        if (w == 0) return std::nullopt;
        Rat a = abs(w);
        if (first || a < min_abs) {
            min_abs = a;
            first = false;
        }
    }
    std::vector<Rat> target = insert_at(reduced, i0, min_abs / 2);

    auto weight_at = [](const std::vector<Rat>& point, const Subset& I) {
        return hm_weight_pn(point, I);
    };
    std::vector<SegmentCrossing> crossings;
    if (!segment_crossings(walls, weight_at, d, target, n, crossings)) return std::nullopt;

    ParityCount acc;
    for (const SegmentCrossing& sc : crossings) {
        std::size_t small = sc.oriented.size();
        std::size_t large = std::size_t(n) - small;
        if (small > large) return std::nullopt;  // crossed toward the symmetric point
        if (small == large) continue;            // equivalence wall, free passage
        Int copies = Int(long(large - small));
        acc.even += copies;
        acc.odd += copies;
    }

    ParityCount sub;
    try {
        sub = count_impl(reduced);
    } catch (const DomainError&) {
        return std::nullopt;
    }
    // projectivization doubling with a parity swap on the twisted copy
    Int even = acc.even + sub.even + sub.odd;
    Int odd = acc.odd + sub.odd + sub.even;
    return ParityCount{even, odd};
}

ParityCount count_impl(const std::vector<Rat>& d) {
    check_weights(d);
    const int n = int(d.size());
    if (!interior_pn(d)) throw OnWallError("weight vector lies on a wall");
    if (is_empty_pn(d)) throw EmptyChamberError("weight vector has empty semistable locus");
    if (n == 3) return {Int(1), Int(1)};
    for (int variant = 0; variant < kReductionVariants; ++variant)
        for (int i0 = 1; i0 <= n; ++i0)
            if (auto res = try_reduction(d, i0, variant)) {
                assert(res->even == res->odd);
                return *res;
            }
    throw NoBoundaryPathError("no admissible boundary reduction found");
}

}  // namespace

ParityCount collection_count_pn(const std::vector<Rat>& d) { return count_impl(d); }

std::vector<ParityCount> collection_count_paths(const std::vector<Rat>& d,
                                                std::size_t max_paths) {
    check_weights(d);
    const int n = int(d.size());
    if (!interior_pn(d)) throw OnWallError("weight vector lies on a wall");
    if (is_empty_pn(d)) throw EmptyChamberError("weight vector has empty semistable locus");
    std::vector<ParityCount> out;
    if (n == 3) {
        out.push_back({Int(1), Int(1)});
        return out;
    }
    for (int variant = 0; variant < kReductionVariants && out.size() < max_paths; ++variant)
        for (int i0 = 1; i0 <= n && out.size() < max_paths; ++i0)
            if (auto res = try_reduction(d, i0, variant)) out.push_back(*res);
    return out;
}

Int pgl2_count(const std::vector<Rat>& d) {
    check_weights(d);
    Int den_lcm = 1;
    for (const Rat& q : d)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    Int total = 0;
    for (const Rat& q : d) {
        Rat s = q * Rat(den_lcm);
        assert(s.get_den() == 1);
        total += s.get_num();
    }
    if (total % 2 != 0)
        throw NotPGL2LinearizableError(
            "sum of integer-scaled weights is odd; no PGL2 equivariant structure");
    return collection_count_pn(d).even;
}

FmLinearization FmLinearization::make(int n, int stage, std::vector<Rat> d,
                                      std::map<Subset, Rat> a) {
    if (n < 3) throw DomainError("need at least three marked points");
    if (stage < 0 || stage > n - 2) throw DomainError("blow-up stage out of range");
    FmLinearization lin;
    lin.n = n;
    lin.stage = stage;
    lin.weights = std::move(d);
    lin.divisor_bound = n - stage - 1;
    lin.mu_bound = n - stage + 1;
    for (const auto& [s, val] : a) {
        check_subset(s, n);
        if (int(s.size()) < lin.divisor_bound)
            throw DomainError("divisor coefficient below the stage bound");
        if (val > 0) throw DomainError("divisor coefficients must be nonpositive");
    }
    lin.divisor_coeffs = std::move(a);
    check_weights(lin.weights);
    return lin;
}

FmLinearization hassett_preset(int n, int stage) {
    if (n < 3) throw DomainError("need at least three marked points");
    if (stage < 1 || stage > n - 2) throw DomainError("blow-up stage out of range");
    std::vector<Rat> d(std::size_t(n), Rat(2));
    if (n % 2 == 0) {
        // break the equal-split walls deterministically
        Rat denom(1);
        for (int i = 0; i < n; ++i) {
            denom *= 3;
            d[std::size_t(i)] += make_rat(1, 1000) / denom;
        }
    }
    int bound = std::max(n - stage - 1, 2);
    std::map<Subset, Rat> a;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int pop = __builtin_popcount(mask);
        if (pop < bound) continue;
        Subset s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        Int two_pow = 1;
        for (int k = 0; k < n - pop; ++k) two_pow *= 2;
        a.emplace(std::move(s), -make_rat(1, 100 * two_pow));
    }
    FmLinearization lin;
    lin.n = n;
    lin.stage = stage;
    lin.weights = std::move(d);
    lin.divisor_coeffs = std::move(a);
    lin.divisor_bound = bound;
    lin.mu_bound = n - stage + 1;
    return lin;
}

Rat fm_weight(const FmLinearization& lin, const Subset& oriented) {
    check_subset(oriented, lin.n);
    Rat acc = hm_weight_pn(lin.weights, oriented);
    Subset comp = complement_subset(oriented, lin.n);
    for (const auto& [s, val] : lin.divisor_coeffs) {
        if (int(s.size()) < lin.divisor_bound) continue;
        if (subset_contains(oriented, s)) acc -= val;
        else if (subset_contains(comp, s)) acc += val;
    }
    return acc;
}

namespace {

// sum over subsets S of a k-set with |S| >= bound of (|S| - 2)
Int blowup_term(int k, int bound) {
    Int acc = 0;
    for (int s = std::max(bound, 0); s <= k; ++s) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), unsigned(k), unsigned(s));
        acc += binom * (s - 2);
    }
    return acc;
}

}  // namespace

Int fm_wall_mu(const FmLinearization& lin, const Subset& oriented) {
    check_subset(oriented, lin.n);
    int small = int(oriented.size());
    int large = lin.n - small;
    Int mu = Int(small - large) + blowup_term(small, lin.mu_bound) -
             blowup_term(large, lin.mu_bound);
    int expect = small < large ? -1 : (small > large ? 1 : 0);
    int got = mu > 0 ? 1 : (mu < 0 ? -1 : 0);
    if (expect != got)
        throw SignMismatchError("mu sign for |I| = " + std::to_string(small) +
                                " disagrees with |I| - |I^c| under range bound " +
                                std::to_string(lin.mu_bound));
    return mu;
}

bool fm_is_empty(const FmLinearization& lin) {
    for (int i = 1; i <= lin.n; ++i)
        if (fm_weight(lin, {i}) > 0) return true;
    return false;
}

AbyssCertificate find_abyss_path(const FmLinearization& lin, int seed) {
    const int n = lin.n;
    auto walls = canonical_subsets(n);
    for (const Subset& I : walls)
        if (fm_weight(lin, I) == 0)
            throw OnWallError("linearization lies on a wall of the extended fan");

    Rat offset_budget = 0;
    for (const auto& [s, val] : lin.divisor_coeffs) offset_budget += abs(val);

    auto weight_at = [&lin](const std::vector<Rat>& point, const Subset& I) {
        FmLinearization moved = lin;
        moved.weights = point;
        return fm_weight(moved, I);
    };

    constexpr int kVariants = 6;
    for (int attempt = 0; attempt < kVariants * 8; ++attempt) {
        const int pick = seed + attempt;
        const int i0 = 1 + pick % n;
        const int variant = (pick / n) % kVariants;

        // Target deep inside the i0-empty region, others on a ternary ladder.
        std::vector<Rat> target(std::size_t(n), Rat(1));
        Rat eta = make_rat(1, Int(100 * (variant + 1)));
        Rat denom(1);
        Rat others_total = 0;
        for (int i = 0; i < n; ++i) {
            if (i + 1 == i0) continue;
            denom *= 3;
            target[std::size_t(i)] += eta / denom;
            others_total += target[std::size_t(i)];
        }
        target[std::size_t(i0) - 1] = others_total + 4 * offset_budget + 4;

        FmLinearization at_target = lin;
        at_target.weights = target;
        if (!fm_is_empty(at_target)) continue;
        bool target_interior = true;
        for (const Subset& I : walls)
            if (fm_weight(at_target, I) == 0) {
                target_interior = false;
                break;
            }
        if (!target_interior) continue;

        std::vector<SegmentCrossing> crossings;
        if (!segment_crossings(walls, weight_at, lin.weights, target, n, crossings))
            continue;

        bool admissible = true;
        AbyssCertificate cert;
        for (const SegmentCrossing& sc : crossings) {
            if (2 * sc.oriented.size() > std::size_t(n)) {
                admissible = false;  // large side increasing: not an abyss slide
                break;
            }
            AbyssCrossing ac;
            ac.oriented = sc.oriented;
            ac.crossing_weights.resize(std::size_t(n));
            for (int i = 0; i < n; ++i)
                ac.crossing_weights[std::size_t(i)] =
                    lin.weights[std::size_t(i)] +
                    sc.t_star * (target[std::size_t(i)] - lin.weights[std::size_t(i)]);
            ac.mu = fm_wall_mu(lin, sc.oriented);
            cert.crossings.push_back(std::move(ac));
        }
        if (!admissible) continue;
        cert.terminal_weights = target;
        cert.empty_witness = 0;
        for (int i = 1; i <= n; ++i)
            if (fm_weight(at_target, {i}) > 0) {
                cert.empty_witness = i;
                break;
            }
        assert(cert.empty_witness != 0);
        return cert;
    }
    throw NoAbyssPathError("no admissible slide into the abyss found");
}

}  // namespace gkz::curves
