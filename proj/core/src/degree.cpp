#include "kgraph/degree.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

void check_entry(std::uint64_t v) {
    if (v >= Degree::kLimit) {
        throw DomainError("degree entry " + std::to_string(v) + " exceeds 2^31 - 1");
    }
}

void check_rank(const Degree& m, const Degree& n) {
    if (m.rank() != n.rank()) {
        throw InputError("rank mismatch: " + m.to_string() + " vs " + n.to_string());
    }
}

}  // namespace

Degree::Degree(std::size_t rank) : coords_(rank, 0) {
    if (rank == 0) throw InputError("degree rank must be at least 1");
}

Degree::Degree(std::initializer_list<value_type> coords) : Degree(std::vector<value_type>(coords)) {}

Degree::Degree(std::vector<value_type> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("degree rank must be at least 1");
    for (auto c : coords_) check_entry(c);
}

Degree Degree::unit(std::size_t rank, int color) {
    if (color < 1 || static_cast<std::size_t>(color) > rank) {
        throw InputError("color " + std::to_string(color) + " outside 1.." + std::to_string(rank));
    }
    Degree d(rank);
    d.coords_[static_cast<std::size_t>(color - 1)] = 1;
    return d;
}

Degree Degree::uniform(std::size_t rank, value_type c) {
    check_entry(c);
    Degree d(rank);
    std::fill(d.coords_.begin(), d.coords_.end(), c);
    return d;
}

bool Degree::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

std::uint64_t Degree::total() const noexcept {
    std::uint64_t s = 0;
    for (auto c : coords_) s += c;
    return s;
}

std::string Degree::to_string() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
    os << '(';
    for (std::size_t i = 0; i < d.rank(); ++i) {
        if (i) os << ',';
        os << d[i];
    }
    return os << ')';
}

bool leq(const Degree& m, const Degree& n) {
    check_rank(m, n);
    for (std::size_t i = 0; i < m.rank(); ++i) {
        if (m[i] > n[i]) return false;
    }
    return true;
}

Degree join(const Degree& m, const Degree& n) {
    check_rank(m, n);
    std::vector<Degree::value_type> out(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) out[i] = std::max(m[i], n[i]);
    return Degree(std::move(out));
}

Degree meet(const Degree& m, const Degree& n) {
    check_rank(m, n);
    std::vector<Degree::value_type> out(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) out[i] = std::min(m[i], n[i]);
    return Degree(std::move(out));
}

Degree add(const Degree& m, const Degree& n) {
    check_rank(m, n);
    std::vector<Degree::value_type> out(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) {
        std::uint64_t s = std::uint64_t{m[i]} + n[i];
        check_entry(s);
        out[i] = static_cast<Degree::value_type>(s);
    }
    return Degree(std::move(out));
}

Degree subtract(const Degree& n, const Degree& m) {
    if (!leq(m, n)) {
        throw DomainError("cannot subtract " + m.to_string() + " from " + n.to_string());
    }
    std::vector<Degree::value_type> out(m.rank());
    for (std::size_t i = 0; i < m.rank(); ++i) out[i] = n[i] - m[i];
    return Degree(std::move(out));
}

Degree scale(const Degree& d, std::uint32_t c) {
    std::vector<Degree::value_type> out(d.rank());
    for (std::size_t i = 0; i < d.rank(); ++i) {
        std::uint64_t s = std::uint64_t{d[i]} * c;
        check_entry(s);
        out[i] = static_cast<Degree::value_type>(s);
    }
    return Degree(std::move(out));
}

std::pair<Degree, Degree> positive_part(std::span<const std::int64_t> p) {
    if (p.empty()) throw InputError("signed vector must have rank at least 1");
    if (std::all_of(p.begin(), p.end(), [](auto x) { return x == 0; })) {
        throw DomainError("positive_part of the zero vector");
    }
    std::vector<Degree::value_type> neg(p.size()), pos(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        std::int64_t x = p[i];
        std::uint64_t mag = x < 0 ? static_cast<std::uint64_t>(-(x + 1)) + 1 : static_cast<std::uint64_t>(x);
        check_entry(mag);
        (x < 0 ? neg : pos)[i] = static_cast<Degree::value_type>(mag);
    }
    return {Degree(std::move(neg)), Degree(std::move(pos))};
}

std::vector<Degree> degrees_below(const Degree& bound) {
    std::vector<Degree> out;
    if (bound.rank() == 0) return out;
    std::vector<Degree::value_type> cur(bound.rank(), 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = bound.rank();
        while (i > 0) {
            --i;
            if (cur[i] < bound[i]) {
                ++cur[i];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur.end(), 0);
                break;
            }
            if (i == 0) return out;
        }
    }
}

}  // namespace kgraph

std::size_t std::hash<kgraph::Degree>::operator()(const kgraph::Degree& d) const noexcept {
    std::size_t h = d.rank();
    for (auto c : d.coords()) h = h * 1000003u ^ c;
    return h;
}
