#include "ssga/ga/genome.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <random>

namespace ssga::ga {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::uint64_t tail_mask(std::size_t n) {
    const std::size_t rem = n % kWordBits;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

void require_same_length(const Genome& a, const Genome& b) {
    if (a.size() != b.size())
        throw ContractViolation("genomes differ in length: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
}

} // namespace

Genome::Genome(std::size_t n) : words_(word_count(n), 0), n_(n), fitness_(0) {}

Genome Genome::from_string(std::string_view bits) {
    Genome g(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            g.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        else if (bits[i] != '0')
            throw ContractViolation("bitstring may only contain '0' and '1'");
    }
    g.recount();
    return g;
}

Genome Genome::random(std::size_t n, Rng& rng) {
    Genome g(n);
    for (auto& w : g.words_) w = rng();
    if (!g.words_.empty()) g.words_.back() &= tail_mask(n);
    g.recount();
    return g;
}

Genome Genome::ones(std::size_t n) {
    Genome g(n);
    std::fill(g.words_.begin(), g.words_.end(), ~std::uint64_t{0});
    if (!g.words_.empty()) g.words_.back() &= tail_mask(n);
    g.fitness_ = n;
    return g;
}

bool Genome::bit(std::size_t i) const {
    if (i >= n_) throw ContractViolation("bit index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void Genome::flip(std::size_t i) {
    if (i >= n_) throw ContractViolation("bit index out of range");
    auto& w = words_[i / kWordBits];
    const std::uint64_t m = std::uint64_t{1} << (i % kWordBits);
    w ^= m;
    if (w & m)
        ++fitness_;
    else
        --fitness_;
}

std::string Genome::to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (bit(i)) s[i] = '1';
    return s;
}

void Genome::recount() noexcept {
    std::size_t f = 0;
    for (auto w : words_) f += static_cast<std::size_t>(std::popcount(w));
    fitness_ = f;
}

void Genome::assign_crossover(const Genome& x, const Genome& y, Rng& rng) {
    require_same_length(x, y);
    n_ = x.n_;
    words_.resize(x.words_.size());
    std::size_t f = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        const std::uint64_t diff = x.words_[k] ^ y.words_[k];
        // Agreeing positions are copied; only differing words consume randomness.
        std::uint64_t w = x.words_[k];
        if (diff != 0) w ^= diff & rng();
        words_[k] = w;
        f += static_cast<std::size_t>(std::popcount(w));
    }
    fitness_ = f;
}

void Genome::assign_or(const Genome& x, const Genome& y) {
    require_same_length(x, y);
    n_ = x.n_;
    words_.resize(x.words_.size());
    std::size_t f = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] = x.words_[k] | y.words_[k];
        f += static_cast<std::size_t>(std::popcount(words_[k]));
    }
    fitness_ = f;
}

void Genome::assign_biased_crossover(const Genome& parent, const Genome& donor, double bias,
                                     Rng& rng) {
    require_same_length(parent, donor);
    n_ = parent.n_;
    words_ = parent.words_;
    fitness_ = parent.fitness_;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        std::uint64_t diff = parent.words_[k] ^ donor.words_[k];
        while (diff != 0) {
            const std::uint64_t lowest = diff & (~diff + 1);
            diff ^= lowest;
            if (unit(rng) < bias) {
                words_[k] ^= lowest;
                if (words_[k] & lowest)
                    ++fitness_;
                else
                    --fitness_;
            }
        }
    }
}

void Genome::flip_exactly(std::size_t count, Rng& rng) {
    if (count > n_) throw ContractViolation("cannot flip more bits than the genome holds");
    if (count == 0) return;
    std::uniform_int_distribution<std::size_t> pos(0, n_ - 1);

    if (count <= 16) {
        std::array<std::size_t, 16> chosen{};
        std::size_t have = 0;
        while (have < count) {
            const std::size_t p = pos(rng);
            if (std::find(chosen.begin(), chosen.begin() + have, p) != chosen.begin() + have)
                continue;
            chosen[have++] = p;
            flip(p);
        }
        return;
    }

    // Large counts: mark positions by rejection; for count > n/2 pick the
    // complement instead so the expected number of draws stays below 2n.
    const bool pick_kept = 2 * count > n_;
    const std::size_t picks = pick_kept ? n_ - count : count;
    std::vector<char> marked(n_, 0);
    std::size_t have = 0;
    while (have < picks) {
        const std::size_t p = pos(rng);
        if (marked[p]) continue;
        marked[p] = 1;
        ++have;
    }
    for (std::size_t i = 0; i < n_; ++i)
        if (static_cast<bool>(marked[i]) != pick_kept) flip(i);
}

void Genome::mutate(double rate, Rng& rng) {
    if (!(rate > 0.0) || rate > 1.0)
        throw ContractViolation("mutation probability must lie in (0, 1]");
    std::size_t count = n_;
    if (rate < 1.0) {
        std::binomial_distribution<std::size_t> flips(n_, rate);
        count = flips(rng);
    }
    flip_exactly(count, rng);
}

std::size_t onemax(const Genome& g) noexcept {
    std::size_t f = 0;
    for (auto w : g.words()) f += static_cast<std::size_t>(std::popcount(w));
    return f;
}

std::size_t hamming_distance(const Genome& a, const Genome& b) {
    require_same_length(a, b);
    const auto wa = a.words();
    const auto wb = b.words();
    std::size_t d = 0;
    for (std::size_t k = 0; k < wa.size(); ++k)
        d += static_cast<std::size_t>(std::popcount(wa[k] ^ wb[k]));
    return d;
}

Genome uniform_crossover(const Genome& x, const Genome& y, Rng& rng) {
    Genome out;
    out.assign_crossover(x, y, rng);
    return out;
}

Genome bitwise_or(const Genome& x, const Genome& y) {
    Genome out;
    out.assign_or(x, y);
    return out;
}

Genome standard_bit_mutation(const Genome& g, double c, Rng& rng) {
    const auto n = static_cast<double>(g.size());
    if (!(c > 0.0) || c > n)
        throw ContractViolation("mutation constant c must satisfy 0 < c <= n");
    Genome out = g;
    out.mutate(c / n, rng);
    return out;
}

} // namespace ssga::ga
