#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ssga/rng.hpp"

namespace ssga {

/// Raised when an operation is called outside its documented preconditions.
class ContractViolation : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

} // namespace ssga

namespace ssga::ga {

/// Fixed-length bitstring with its OneMax value cached.
///
/// Bits are packed little-endian into 64-bit words; bits past `size()` in the
/// last word are always zero. Every mutating member keeps `fitness()` equal to
/// the number of set bits.
class Genome {
  public:
    Genome() = default;
    explicit Genome(std::size_t n);

    static Genome from_string(std::string_view bits);
    static Genome random(std::size_t n, Rng& rng);
    static Genome ones(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    std::size_t fitness() const noexcept { return fitness_; }
    bool is_optimal() const noexcept { return fitness_ == n_; }

    bool bit(std::size_t i) const;
    void flip(std::size_t i);

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::string to_string() const;

    friend bool operator==(const Genome& a, const Genome& b) noexcept {
        return a.n_ == b.n_ && a.fitness_ == b.fitness_ && a.words_ == b.words_;
    }

    // Buffer-reusing kernels behind the value-returning operators below.
    void assign_crossover(const Genome& x, const Genome& y, Rng& rng);
    void assign_or(const Genome& x, const Genome& y);
    void assign_biased_crossover(const Genome& parent, const Genome& donor, double bias, Rng& rng);
    void mutate(double rate, Rng& rng);
    void flip_exactly(std::size_t count, Rng& rng);

  private:
    void recount() noexcept;

    std::vector<std::uint64_t> words_;
    std::size_t n_ = 0;
    std::size_t fitness_ = 0;
};

/// Counts the 1-bits by scanning the string (the fitness function proper).
std::size_t onemax(const Genome& g) noexcept;

std::size_t hamming_distance(const Genome& a, const Genome& b);

/// Each bit taken from x or y with probability 1/2, independently.
Genome uniform_crossover(const Genome& x, const Genome& y, Rng& rng);

/// Bitwise OR; the best offspring uniform crossover of x and y can produce.
Genome bitwise_or(const Genome& x, const Genome& y);

/// Flips each bit independently with probability c/n. Requires 0 < c <= n.
///
/// Sampled as a Binomial(n, c/n) flip count followed by that many distinct
/// uniformly chosen positions, which has the same law as per-bit coin flips.
Genome standard_bit_mutation(const Genome& g, double c, Rng& rng);

} // namespace ssga::ga
