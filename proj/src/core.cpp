#include "atomlat/core.hpp"

#include <algorithm>
#include <bit>

namespace atomlat {

ConstantTable::ConstantTable(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw ValueError("constant list must not be empty");
    index_.reserve(names_.size());
    for (uint32_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw ValueError("empty constant name at position " + std::to_string(i));
        auto [it, inserted] = index_.emplace(names_[i], i);
        (void)it;
        if (!inserted)
            throw ValueError("duplicate constant name '" + names_[i] + "'");
    }
}

std::optional<uint32_t> ConstantTable::index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

TablePtr intern_constants(std::vector<std::string> names) {
    return std::make_shared<const ConstantTable>(std::move(names));
}

namespace {
constexpr uint32_t kWordBits = 64;

uint32_t word_count(uint32_t universe) { return (universe + kWordBits - 1) / kWordBits; }
} // namespace

CSet::CSet(uint32_t universe) : universe_(universe), words_(word_count(universe), 0) {}

CSet CSet::full(uint32_t universe) {
    CSet s(universe);
    for (auto& w : s.words_)
        w = ~uint64_t{0};
    s.trim();
    return s;
}

CSet CSet::of(uint32_t universe, std::initializer_list<uint32_t> indices) {
    CSet s(universe);
    for (uint32_t i : indices)
        s.set(i);
    return s;
}

CSet CSet::from_mask(uint32_t universe, uint64_t mask) {
    if (universe > kWordBits)
        throw ValueError("from_mask requires a universe of at most 64 constants");
    CSet s(universe);
    if (!s.words_.empty())
        s.words_[0] = mask;
    s.trim();
    return s;
}

void CSet::trim() {
    uint32_t rem = universe_ % kWordBits;
    if (rem != 0 && !words_.empty())
        words_.back() &= (uint64_t{1} << rem) - 1;
}

bool CSet::test(uint32_t i) const {
    if (i >= universe_)
        throw ValueError("constant index " + std::to_string(i) + " out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void CSet::set(uint32_t i) {
    if (i >= universe_)
        throw ValueError("constant index " + std::to_string(i) + " out of range");
    words_[i / kWordBits] |= uint64_t{1} << (i % kWordBits);
}

uint32_t CSet::count() const {
    uint32_t n = 0;
    for (uint64_t w : words_)
        n += static_cast<uint32_t>(std::popcount(w));
    return n;
}

bool CSet::empty() const {
    for (uint64_t w : words_)
        if (w != 0)
            return false;
    return true;
}

bool CSet::is_full() const { return count() == universe_; }

namespace {
void check_same_universe(const CSet& a, const CSet& b) {
    if (a.universe() != b.universe())
        throw ValueError("constant sets belong to different universes");
}
} // namespace

CSet& CSet::operator|=(const CSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] |= other.words_[i];
    return *this;
}

CSet& CSet::operator&=(const CSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= other.words_[i];
    return *this;
}

CSet& CSet::operator-=(const CSet& other) {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= ~other.words_[i];
    return *this;
}

CSet CSet::complement() const {
    CSet s(*this);
    for (auto& w : s.words_)
        w = ~w;
    s.trim();
    return s;
}

bool CSet::subset_of(const CSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

bool CSet::proper_subset_of(const CSet& other) const {
    return subset_of(other) && *this != other;
}

bool CSet::intersects(const CSet& other) const {
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool CSet::lex_less(const CSet& a, const CSet& b) {
    check_same_universe(a, b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
        const uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff == 0)
            continue;
        // At the lowest differing index one side carries the smaller element
        // unless the other side has already run out (the prefix case).
        const int j = std::countr_zero(diff);
        const bool in_a = (a.words_[i] >> j) & 1;
        const CSet& other = in_a ? b : a;
        const uint64_t prefix = (j == 63) ? ~uint64_t{0} : (uint64_t{1} << (j + 1)) - 1;
        bool other_continues = (other.words_[i] & ~prefix) != 0;
        for (std::size_t k = i + 1; k < a.words_.size() && !other_continues; ++k)
            other_continues = other.words_[k] != 0;
        return in_a ? other_continues : !other_continues;
    }
    return false;
}

std::vector<uint32_t> CSet::indices() const {
    std::vector<uint32_t> out;
    out.reserve(count());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        uint64_t w = words_[i];
        while (w != 0) {
            out.push_back(static_cast<uint32_t>(i * kWordBits + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::size_t CSet::hash() const {
    std::size_t h = 0xcbf29ce484222325ULL ^ universe_;
    for (uint64_t w : words_) {
        h ^= w;
        h *= 0x100000001b3ULL;
    }
    return h;
}

bool size_lex_less(const CSet& a, const CSet& b) {
    uint32_t ca = a.count();
    uint32_t cb = b.count();
    if (ca != cb)
        return ca < cb;
    return CSet::lex_less(a, b);
}

Atom atom_join(std::span<const Atom> atoms) {
    if (atoms.empty())
        throw ValueError("atom_join requires at least one atom");
    CSet joined = atoms.front().ucs;
    for (std::size_t i = 1; i < atoms.size(); ++i)
        joined |= atoms[i].ucs;
    return Atom{std::move(joined)};
}

bool wider_than(const Atom& phi, const Atom& psi) {
    return psi.ucs.proper_subset_of(phi.ucs);
}

} // namespace atomlat
