#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "linext/bounds.hpp"
#include "linext/errors.hpp"

namespace linext {

// Axis-aligned box over the bound expression's variables.
struct Box {
    std::array<double, 3> lo{0, 0, 0};
    std::array<double, 3> hi{0, 0, 0};
    int dims = 0;
    int depth = 0;
};

// One expression restricted to one variable range; certification targets
// stitch several pieces to cover a crossover (e.g. a bound that switches to
// the large-matching expression past its useful range).
struct CertPiece {
    BoundExpr expr;
    Box region;
};

inline Box make_box(std::initializer_list<std::pair<double, double>> ranges) {
    Box b;
    b.dims = static_cast<int>(ranges.size());
    int i = 0;
    for (auto [lo, hi] : ranges) {
        b.lo[static_cast<std::size_t>(i)] = lo;
        b.hi[static_cast<std::size_t>(i)] = hi;
        ++i;
    }
    return b;
}

namespace detail {

inline constexpr double kFeasSlack = 1e-12;

// Does the box contain at least one point of the expression's constraint
// set? Conservative: discards a box only when provably empty.
inline bool box_feasible(BoundExpr e, const Box& b) {
    auto le = [](double l, double r) { return l <= r + kFeasSlack; };
    const double a1 = b.lo[0], a2 = b.hi[0];
    const double b1 = b.lo[1], b2 = b.hi[1];
    const double g1 = b.lo[2], g2 = b.hi[2];
    switch (e) {
        case BoundExpr::PartitionBound:
        case BoundExpr::CanonicalBound:
        case BoundExpr::LargeMatching: return true;
        case BoundExpr::GammaZero: return le(b1, a2);
        case BoundExpr::TauJnEntropy: return le(b1, a2) && le(2 * a1 + 3 * b1, 1.0);
        case BoundExpr::TauJnSimple: return le(b1, a2) && le(1.0, 2 * a2 + 3 * b2);
        case BoundExpr::TauLe:
            return le(g1, b2) && le(b1, a2) && le(2 * a1 + b1 + 3 * g1, 1.0);
        case BoundExpr::PiLe:
            return le(g1, b2) && le(b1, a2) && le(2 * a1 + b1 + g1, 1.0) &&
                   le(1.0, 2 * a2 + b2 + 3 * g2);
    }
    return false;
}

inline bool point_feasible(BoundExpr e, const Box& region, std::array<double, 3> x) {
    auto le = [](double l, double r) { return l <= r + kFeasSlack; };
    for (int i = 0; i < region.dims; ++i)
        if (!le(region.lo[static_cast<std::size_t>(i)], x[static_cast<std::size_t>(i)]) ||
            !le(x[static_cast<std::size_t>(i)], region.hi[static_cast<std::size_t>(i)]))
            return false;
    switch (e) {
        case BoundExpr::PartitionBound:
        case BoundExpr::CanonicalBound:
        case BoundExpr::LargeMatching: return true;
        case BoundExpr::GammaZero: return le(x[1], x[0]);
        case BoundExpr::TauJnEntropy: return le(x[1], x[0]) && le(2 * x[0] + 3 * x[1], 1.0);
        case BoundExpr::TauJnSimple: return le(x[1], x[0]) && le(1.0, 2 * x[0] + 3 * x[1]);
        case BoundExpr::TauLe:
            return le(x[2], x[1]) && le(x[1], x[0]) && le(2 * x[0] + x[1] + 3 * x[2], 1.0);
        case BoundExpr::PiLe:
            return le(x[2], x[1]) && le(x[1], x[0]) && le(2 * x[0] + x[1] + x[2], 1.0) &&
                   le(1.0, 2 * x[0] + x[1] + 3 * x[2]);
    }
    return false;
}

// minimum of x^x over an interval within [0,1]
inline double min_pow_self(double lo, double hi) {
    constexpr double inv_e = 0.36787944117144233;
    if (lo <= inv_e && inv_e <= hi) return std::exp(-inv_e);
    return std::min(pow_self(lo), pow_self(hi));
}

// maximum of x^x over an interval within [0,1]: attained at an endpoint
inline double max_pow_self(double lo, double hi) {
    return std::max(pow_self(lo), pow_self(hi));
}

inline void clamp_unit(double& lo, double& hi) {
    lo = std::max(lo, 0.0);
    hi = std::min(std::max(hi, 0.0), 1.0);
    if (lo > hi) lo = hi;
}

} // namespace detail

// Upper bound of the expression over the box: increasing factors evaluated
// at the upper corner, decreasing ones at the lower corner; the unimodal
// x^x factors of the entropy bound use interval extrema.
inline double corner_bound(BoundExpr e, const Box& b) {
    using namespace detail;
    const double a1 = b.lo[0], a2 = b.hi[0];
    const double b1 = b.lo[1], b2 = b.hi[1];
    const double g1 = b.lo[2], g2 = b.hi[2];
    switch (e) {
        case BoundExpr::PartitionBound:
            return std::pow(3.0, a2) * pow_one_plus(1.0 - 2.0 * a1, 4.0 * a2);
        case BoundExpr::CanonicalBound:
            return std::pow(3.0, a2) * pow_one_plus(1.0 - 2.0 * a1, 2.0 * a2);
        case BoundExpr::LargeMatching: return 2.0 * std::pow(0.75, a1);
        case BoundExpr::GammaZero: return std::pow(3.0, a2) * std::pow(5.0 / 3.0, b2);
        case BoundExpr::TauJnSimple:
            return std::pow(3.0, a2) * std::pow(5.0 / 3.0, b2) *
                   std::pow(2.0, 1.0 - 2.0 * a1 - b1);
        case BoundExpr::TauJnEntropy: {
            double t_lo = 1.0 - 2.0 * a2 - b2, t_hi = 1.0 - 2.0 * a1 - b1;
            clamp_unit(t_lo, t_hi);
            double r_lo = t_lo - b2, r_hi = t_hi - b1;
            clamp_unit(r_lo, r_hi);
            return std::pow(3.0, a2) * std::pow(5.0 / 3.0, b2) * max_pow_self(t_lo, t_hi) /
                   (min_pow_self(std::max(b1, 0.0), std::min(b2, 1.0)) * min_pow_self(r_lo, r_hi));
        }
        case BoundExpr::TauLe:
            return std::pow(3.0, a2) * std::pow(5.0 / 3.0, b2) * std::pow(9.0 / 5.0, g2) *
                   pow_one_plus(1.0 - 2.0 * a1 - b1 - g1, 2.0 * g2);
        case BoundExpr::PiLe:
            return 2.0 * std::pow(0.75, a1) * std::pow(5.0 / 6.0, b1) * std::pow(0.9, g1);
    }
    return 0.0;
}

struct LeafRecord {
    int piece;
    Box box;
    double bound;     // inflated corner bound; meaningless when infeasible
    bool infeasible;
};

struct Certificate {
    enum class Status { Certified, Failed };

    std::string target;
    double threshold = 0.0;
    Status status = Status::Certified;
    std::size_t boxes_processed = 0;
    double max_corner_bound = 0.0;  // over accepted leaves
    std::vector<LeafRecord> leaves;

    bool has_witness = false;  // set when status is Failed
    int witness_piece = 0;
    std::array<double, 3> witness_point{0, 0, 0};
    double witness_value = 0.0;

    bool certified() const { return status == Status::Certified; }
};

// Named certification targets; composite names stitch crossover regions.
inline std::vector<CertPiece> certification_pieces(const std::string& target) {
    constexpr double third = 1.0 / 3.0;
    if (target == "tau-le")
        return {{BoundExpr::TauLe, make_box({{0, third}, {0, third}, {0, third}})}};
    if (target == "pi-le")
        return {{BoundExpr::PiLe, make_box({{0, third}, {0, third}, {0, third}})}};
    if (target == "gamma0")
        return {{BoundExpr::GammaZero, make_box({{0, third}, {0, third}})}};
    if (target == "large-matching")
        return {{BoundExpr::LargeMatching, make_box({{third, 0.5}})}};
    if (target == "partition")
        return {{BoundExpr::PartitionBound, make_box({{0, 1.0 / 6.0}})},
                {BoundExpr::LargeMatching, make_box({{1.0 / 6.0, 0.5}})}};
    if (target == "canonical")
        return {{BoundExpr::CanonicalBound, make_box({{0, 0.25}})},
                {BoundExpr::LargeMatching, make_box({{0.25, 0.5}})}};
    if (target == "tau-jn-entropy")
        return {{BoundExpr::TauJnEntropy, make_box({{0, third}, {0, third}})}};
    if (target == "tau-jn-simple")
        return {{BoundExpr::TauJnSimple, make_box({{0, third}, {0, third}})}};
    if (target == "tau-jn")
        return {{BoundExpr::TauJnEntropy, make_box({{0, third}, {0, third}})},
                {BoundExpr::TauJnSimple, make_box({{0, third}, {0, third}})}};
    throw ArgumentError("unknown certification target: " + target);
}

inline std::string describe_box(const Box& b) {
    std::ostringstream os;
    os.precision(17);
    for (int i = 0; i < b.dims; ++i) {
        if (i) os << " ";
        os << "[" << b.lo[static_cast<std::size_t>(i)] << ", "
           << b.hi[static_cast<std::size_t>(i)] << "]";
    }
    return os.str();
}

namespace detail {

// candidate witness points inside a box, filtered for feasibility later
inline std::vector<std::array<double, 3>> sample_candidates(const Box& b) {
    std::array<double, 3> center{0, 0, 0}, sorted{0, 0, 0};
    for (int i = 0; i < b.dims; ++i)
        center[static_cast<std::size_t>(i)] =
            0.5 * (b.lo[static_cast<std::size_t>(i)] + b.hi[static_cast<std::size_t>(i)]);
    // order-projected center: coordinates descending satisfies g <= b <= a,
    // then clamped back into the box
    sorted = center;
    std::sort(sorted.begin(), sorted.begin() + b.dims, std::greater<>());
    for (int i = 0; i < b.dims; ++i) {
        auto j = static_cast<std::size_t>(i);
        sorted[j] = std::min(std::max(sorted[j], b.lo[j]), b.hi[j]);
    }
    return {center, sorted, b.lo, b.hi};
}

} // namespace detail

// Covers each piece's region with boxes, splitting along the longest side
// whenever the inflated corner bound reaches the threshold. Certified iff
// every feasible leaf stays below; a feasible sample point evaluating above
// the threshold proves failure.
inline Certificate certify_bound(const std::string& target, double threshold,
                                 int depth_cap = 60) {
    if (!(threshold > 0.0)) throw ArgumentError("threshold must be positive");
    constexpr double inflation = 1.0 + 1e-12;
    Certificate cert;
    cert.target = target;
    cert.threshold = threshold;
    auto pieces = certification_pieces(target);

    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const CertPiece& piece = pieces[pi];
        std::vector<Box> work{piece.region};
        while (!work.empty()) {
            Box box = work.back();
            work.pop_back();
            ++cert.boxes_processed;
            if (!detail::box_feasible(piece.expr, box)) {
                cert.leaves.push_back(LeafRecord{static_cast<int>(pi), box, 0.0, true});
                continue;
            }
            double bound = corner_bound(piece.expr, box) * inflation;
            if (bound < threshold) {
                cert.max_corner_bound = std::max(cert.max_corner_bound, bound);
                cert.leaves.push_back(LeafRecord{static_cast<int>(pi), box, bound, false});
                continue;
            }
            // disprovable? check feasible sample points against the threshold
            for (const auto& cand : detail::sample_candidates(box)) {
                if (!detail::point_feasible(piece.expr, piece.region, cand)) continue;
                double value = evaluate_raw(
                    piece.expr, std::span<const double>(cand.data(),
                                                        static_cast<std::size_t>(box.dims)));
                if (value > threshold * inflation) {
                    cert.status = Certificate::Status::Failed;
                    cert.has_witness = true;
                    cert.witness_piece = static_cast<int>(pi);
                    cert.witness_point = cand;
                    cert.witness_value = value;
                    cert.leaves.push_back(
                        LeafRecord{static_cast<int>(pi), box, bound, false});
                    return cert;
                }
            }
            if (box.depth >= depth_cap)
                throw DepthExceededError("split depth cap reached at box " + describe_box(box) +
                                         " with bound " + std::to_string(bound));
            int side = 0;
            for (int i = 1; i < box.dims; ++i)
                if (box.hi[static_cast<std::size_t>(i)] - box.lo[static_cast<std::size_t>(i)] >
                    box.hi[static_cast<std::size_t>(side)] - box.lo[static_cast<std::size_t>(side)])
                    side = i;
            double mid = 0.5 * (box.lo[static_cast<std::size_t>(side)] +
                                box.hi[static_cast<std::size_t>(side)]);
            Box left = box, right = box;
            left.hi[static_cast<std::size_t>(side)] = mid;
            right.lo[static_cast<std::size_t>(side)] = mid;
            left.depth = right.depth = box.depth + 1;
            work.push_back(right);
            work.push_back(left);
        }
    }
    return cert;
}

// Typed entry point; PartitionBound and CanonicalBound certify with their
// large-matching crossover, matching the stitched named targets.
inline Certificate certify_bound(BoundExpr expr, double threshold, int depth_cap = 60) {
    return certify_bound(to_string(expr), threshold, depth_cap);
}

// Line-oriented artifact: header, then one line per leaf box.
inline void write_certificate(std::ostream& os, const Certificate& cert) {
    os.precision(17);
    os << "expr " << cert.target << "\n";
    os << "threshold " << cert.threshold << "\n";
    os << "status " << (cert.certified() ? "Certified" : "Failed") << "\n";
    os << "boxes " << cert.leaves.size() << "\n";
    os << "max-corner-bound " << cert.max_corner_bound << "\n";
    if (cert.has_witness) {
        os << "witness piece=" << cert.witness_piece << " point=";
        for (int i = 0; i < 3; ++i) os << (i ? "," : "") << cert.witness_point[static_cast<std::size_t>(i)];
        os << " value=" << cert.witness_value << "\n";
    }
    for (const LeafRecord& leaf : cert.leaves) {
        os << "box piece=" << leaf.piece;
        for (int i = 0; i < leaf.box.dims; ++i)
            os << " " << leaf.box.lo[static_cast<std::size_t>(i)] << " "
               << leaf.box.hi[static_cast<std::size_t>(i)];
        if (leaf.infeasible)
            os << " infeasible";
        else
            os << " bound " << leaf.bound;
        os << "\n";
    }
}

} // namespace linext
