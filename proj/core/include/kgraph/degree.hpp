#pragma once

// Degrees: elements of the monoid N^k ordered componentwise.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace kgraph {

class Degree {
public:
    using value_type = std::uint32_t;
    /// Entries are kept strictly below this bound; arithmetic that would reach it throws.
    static constexpr value_type kLimit = value_type{1} << 31;

    Degree() = default;
    /// The zero degree of rank k.
    explicit Degree(std::size_t rank);
    Degree(std::initializer_list<value_type> coords);
    explicit Degree(std::vector<value_type> coords);

    /// Generator e_i; `color` is 1-based as in edge records.
    static Degree unit(std::size_t rank, int color);
    /// (c, c, ..., c)
    static Degree uniform(std::size_t rank, value_type c);

    std::size_t rank() const noexcept { return coords_.size(); }
    value_type operator[](std::size_t i) const { return coords_[i]; }
    std::span<const value_type> coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;
    /// Sum of entries.
    std::uint64_t total() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Degree&, const Degree&) = default;
    /// Lexicographic; used only for deterministic ordering, not the lattice order.
    friend auto operator<=>(const Degree&, const Degree&) = default;

private:
    std::vector<value_type> coords_;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

bool leq(const Degree& m, const Degree& n);
Degree join(const Degree& m, const Degree& n);
Degree meet(const Degree& m, const Degree& n);
Degree add(const Degree& m, const Degree& n);
/// n - m; requires m <= n.
Degree subtract(const Degree& n, const Degree& m);
/// c * d
Degree scale(const Degree& d, std::uint32_t c);

/// Splits a nonzero signed vector p into (p-, p+) with p+ - p- = p and
/// meet(p-, p+) = 0.
std::pair<Degree, Degree> positive_part(std::span<const std::int64_t> p);

/// Every degree d with 0 <= d <= bound, in lexicographic order.
std::vector<Degree> degrees_below(const Degree& bound);

}  // namespace kgraph

template <>
struct std::hash<kgraph::Degree> {
    std::size_t operator()(const kgraph::Degree& d) const noexcept;
};
