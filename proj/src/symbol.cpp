#include "motivic/symbol.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace motivic {

namespace {

class SymbolTable {
public:
    Var intern(SymbolKind kind, std::string_view base, int weight)
    {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(static_cast<int>(kind), std::string(base), weight);
        if (auto it = index_.find(key); it != index_.end()) {
            return it->second;
        }
        Symbol &stored = storage_.emplace_back();
        stored.kind = kind;
        stored.base = std::string(base);
        stored.weight = weight;
        index_.emplace(std::move(key), &stored);
        renumber();
        return &stored;
    }

private:
    // The index is ordered like compare_vars. New ranks exceed every old one
    // and are assigned from the top down, so readers never see two symbols
    // out of order.
    void renumber()
    {
        std::uint64_t r = next_rank_ + index_.size();
        for (auto it = index_.rbegin(); it != index_.rend(); ++it) {
            const_cast<Symbol *>(it->second)->rank.store(--r, std::memory_order_relaxed);
        }
        next_rank_ += index_.size();
    }

    std::uint64_t next_rank_ = 1;
    std::mutex mutex_;
    // deque keeps element addresses stable across growth
    std::deque<Symbol> storage_;
    std::map<std::tuple<int, std::string, int>, Var> index_;
};

SymbolTable &table()
{
    static SymbolTable instance;
    return instance;
}

bool is_reserved(std::string_view base) noexcept
{
    return base == "u" || base == "L" || base == "q" || base == "chi";
}

} // namespace

std::string Symbol::name() const
{
    switch (kind) {
    case SymbolKind::U:
        return "u";
    case SymbolKind::Atom:
        return base + "." + std::to_string(weight);
    case SymbolKind::Chi:
        return "chi(" + base + ")";
    }
    return {};
}

bool is_valid_base(std::string_view base) noexcept
{
    if (base.empty() || is_reserved(base)) {
        return false;
    }
    std::size_t i = 0;
    if (!(std::isalpha(static_cast<unsigned char>(base[0])) || base[0] == '_')) {
        return false;
    }
    while (i < base.size() && (std::isalnum(static_cast<unsigned char>(base[i])) || base[i] == '_')) {
        ++i;
    }
    if (i == base.size()) {
        return true;
    }
    if (base[i] != '[' || base.back() != ']') {
        return false;
    }
    for (std::size_t j = i + 1; j + 1 < base.size(); ++j) {
        char c = base[j];
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '-')) {
            return false;
        }
    }
    return true;
}

Var u_var()
{
    static const Var u = table().intern(SymbolKind::U, "", 1);
    return u;
}

Var atom_var(std::string_view base, int weight)
{
    if (!is_valid_base(base)) {
        throw std::invalid_argument("invalid motive generator name '" + std::string(base) + "'");
    }
    if (weight < 1) {
        throw std::invalid_argument("Adams atom weight must be >= 1");
    }
    return table().intern(SymbolKind::Atom, base, weight);
}

Var chi_var(std::string_view base)
{
    if (!is_valid_base(base)) {
        throw std::invalid_argument("invalid motive generator name '" + std::string(base) + "'");
    }
    return table().intern(SymbolKind::Chi, base, 1);
}

} // namespace motivic
