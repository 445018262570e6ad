#pragma once

#include <atomic>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace motivic {

/// Kinds of indeterminates appearing in coefficient polynomials.
///
/// `U` is the distinguished variable u = -L^{1/2}. `Atom` is an Adams atom
/// psi^weight applied to a named motive generator. `Chi` is the symbolic
/// Euler characteristic of a generator, produced only by Euler
/// specialization in symbolic mode.
enum class SymbolKind { U = 0, Atom = 1, Chi = 2 };

struct Symbol {
    SymbolKind kind;
    std::string base; // empty for U
    int weight;       // >= 1 for Atom, 1 otherwise
    /// Position in the canonical order, maintained by the symbol table.
    std::atomic<std::uint64_t> rank{0};

    /// Text form: `u`, `X.3`, `chi(X)`.
    std::string name() const;
};

/// Interned, immutable symbol. Pointer identity equals symbol identity.
using Var = const Symbol *;

/// Canonical total order: u first, then atoms by (base, weight), then chi's.
inline std::strong_ordering compare_vars(Var a, Var b) noexcept
{
    return a->rank.load(std::memory_order_relaxed) <=> b->rank.load(std::memory_order_relaxed);
}

inline bool var_less(Var a, Var b) noexcept { return a != b && compare_vars(a, b) < 0; }

Var u_var();

/// psi^weight([base]). Throws std::invalid_argument on a malformed base or weight < 1.
Var atom_var(std::string_view base, int weight = 1);

/// Symbolic Euler characteristic chi(base).
Var chi_var(std::string_view base);

/// Identifier[index-list]? where the optional bracketed list holds integers and commas.
bool is_valid_base(std::string_view base) noexcept;

} // namespace motivic
