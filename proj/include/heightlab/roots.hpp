#pragma once

#include "heightlab/bigfloat.hpp"
#include "heightlab/interval.hpp"
#include "heightlab/poly.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace heightlab {

/// Disk {z : |z - center| <= radius} certified to contain exactly one root.
struct RootDisk {
    BigComplex center;
    BigFloat radius;
};

/// Certified enclosures of all roots of a squarefree integer polynomial.
///
/// Disks are pairwise disjoint and each holds exactly one root. The order is
/// canonical: by real part of the center, then imaginary part, then radius.
/// Index k of this set is what the rest of the library calls beta_{k+1}.
class ConjugateSet {
public:
    ConjugateSet(IntPoly source, std::vector<RootDisk> disks, long precision_bits, long target_bits);

    const IntPoly& source() const noexcept { return source_; }
    std::size_t size() const noexcept { return disks_.size(); }
    const RootDisk& operator[](std::size_t k) const { return disks_[k]; }
    std::span<const RootDisk> disks() const noexcept { return disks_; }
    /// Working precision the disks were certified at.
    long precision_bits() const noexcept { return precision_bits_; }
    /// Guaranteed radius bound: radius <= 2^-target_bits * max(1, |center|).
    long target_bits() const noexcept { return target_bits_; }

    /// Axis-aligned box containing disk k.
    ComplexInterval box(std::size_t k) const;
    /// Enclosure of |beta_k| derived from disk k.
    Interval modulus(std::size_t k) const;

private:
    IntPoly source_;
    std::vector<RootDisk> disks_;
    long precision_bits_;
    long target_bits_;
};

inline constexpr long kInitialPrecisionBits = 128;
inline constexpr long kMaxPrecisionBits = 8192;

/// Isolates all roots of p with radii at most 2^-target_bits * max(1, |center|).
///
/// Aberth-Ehrlich iteration at a working precision starting from 128 bits;
/// inclusion radii are n |p(z_i)| / |a_n prod_{j!=i} (z_i - z_j)| evaluated
/// in interval arithmetic. The working precision doubles until the disks are
/// disjoint and small enough, up to 8192 bits (then PrecisionExhausted).
/// Throws DomainError for the zero polynomial, constants, and polynomials
/// with a repeated factor.
ConjugateSet find_roots(const IntPoly& p, long target_bits);

/// Shrinks every radius by at least 2^extra_bits (relative to both the
/// previous radius and the previous target) without changing root indices.
ConjugateSet refine(const ConjugateSet& cs, long extra_bits);

} // namespace heightlab
