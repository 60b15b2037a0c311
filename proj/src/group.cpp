#include "cosdyn/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace cosdyn {

GroupElement::GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("group element needs dimension >= 1");
}

GroupElement GroupElement::zero(int dim) {
    if (dim < 1) throw DomainError("group element needs dimension >= 1");
    return GroupElement(std::vector<std::int64_t>(static_cast<std::size_t>(dim), 0));
}

bool GroupElement::is_identity() const {
    return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

namespace {
void check_dims(const GroupElement& a, const GroupElement& b) {
    if (a.dim() != b.dim())
        throw DomainError("group element dimension mismatch: " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
}
}  // namespace

GroupElement GroupElement::operator+(const GroupElement& o) const {
    check_dims(*this, o);
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-(const GroupElement& o) const {
    check_dims(*this, o);
    std::vector<std::int64_t> c(coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return GroupElement(std::move(c));
}

GroupElement GroupElement::operator-() const {
    std::vector<std::int64_t> c(coords_);
    for (auto& v : c) v = -v;
    return GroupElement(std::move(c));
}

GroupElement GroupElement::scaled(std::int64_t n) const {
    std::vector<std::int64_t> c(coords_);
    for (auto& v : c) v *= n;
    return GroupElement(std::move(c));
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (coords_.size() != o.coords_.size()) return coords_.size() < o.coords_.size();
    return coords_ < o.coords_;
}

std::string GroupElement::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ',';
        os << coords_[i];
    }
    os << ']';
    return os.str();
}

FiniteSet::FiniteSet(std::set<GroupElement> elements) : elements_(std::move(elements)) {
    if (!elements_.empty()) {
        const int d = elements_.begin()->dim();
        for (const auto& e : elements_)
            if (e.dim() != d) throw DomainError("finite set mixes element dimensions");
    }
}

FiniteSet::FiniteSet(std::initializer_list<GroupElement> elements)
    : FiniteSet(std::set<GroupElement>(elements)) {}

FiniteSet FiniteSet::range(std::int64_t a, std::int64_t b) {
    if (a > b) throw DomainError("empty range: " + std::to_string(a) + ".." + std::to_string(b));
    std::set<GroupElement> s;
    for (std::int64_t i = a; i <= b; ++i) s.insert(GroupElement{i});
    return FiniteSet(std::move(s));
}

void FiniteSet::insert(const GroupElement& x) {
    if (!elements_.empty() && elements_.begin()->dim() != x.dim())
        throw DomainError("finite set mixes element dimensions");
    elements_.insert(x);
}

FiniteSet FiniteSet::translated(const GroupElement& g, std::int64_t n) const {
    std::set<GroupElement> s;
    for (const auto& e : elements_) s.insert(e + g.scaled(n));
    return FiniteSet(std::move(s));
}

FiniteSet FiniteSet::united(const FiniteSet& o) const {
    std::set<GroupElement> s(elements_);
    for (const auto& e : o) s.insert(e);
    return FiniteSet(std::move(s));
}

FiniteSet FiniteSet::intersected(const FiniteSet& o) const {
    std::set<GroupElement> s;
    for (const auto& e : elements_)
        if (o.contains(e)) s.insert(e);
    return FiniteSet(std::move(s));
}

bool is_aperiodic(const GroupElement& g) { return !g.is_identity(); }

std::int64_t separation_index(const FiniteSet& K, const GroupElement& g) {
    if (!is_aperiodic(g)) throw AperiodicityError("separation index needs an aperiodic g");
    if (K.empty()) throw DomainError("separation index needs a nonempty set");
    if (K.begin()->dim() != g.dim()) throw DomainError("K and g dimension mismatch");

    // Past bound = max_i ceil(diameter_i / |g_i|) over nonzero g_i, the
    // translate n*g exceeds the diameter of K in some coordinate, so
    // K and K + n*g cannot meet; K and K - n*g meet iff K and K + n*g do.
    std::int64_t bound = 0;
    for (int i = 0; i < g.dim(); ++i) {
        if (g[i] == 0) continue;
        std::int64_t lo = std::numeric_limits<std::int64_t>::max();
        std::int64_t hi = std::numeric_limits<std::int64_t>::min();
        for (const auto& e : K) {
            lo = std::min(lo, e[i]);
            hi = std::max(hi, e[i]);
        }
        const std::int64_t diam = hi - lo;
        bound = std::max(bound, diam / std::llabs(g[i]) + 1);
    }

    std::int64_t index = 0;
    for (std::int64_t n = 1; n <= bound; ++n) {
        if (!K.intersected(K.translated(g, n)).empty()) index = n;
    }
    return index;
}

GroupElement translate(const GroupElement& x, const GroupElement& g, std::int64_t n) {
    return x + g.scaled(n);
}

}  // namespace cosdyn
