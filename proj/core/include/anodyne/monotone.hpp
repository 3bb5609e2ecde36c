#pragma once

#include <string>
#include <vector>

namespace anodyne {

/// A weakly increasing function between finite ordinals, stored as its full
/// value table.  The ordinal of size n has elements {0, ..., n-1}; the
/// domain size is the length of the table.  Elementary cofaces delta_i and
/// codegeneracies sigma_j are derived constructors rather than a separate
/// representation, so there is no operator-word normal form to maintain.
class MonotoneMap {
  public:
    MonotoneMap(std::vector<int> values, int codomain_size);

    static MonotoneMap identity(int size);
    /// delta_i : [n-1] -> [n], the injection missing i (0 <= i <= n, n >= 1).
    static MonotoneMap coface(int n, int i);
    /// sigma_j : [n+1] -> [n], the surjection repeating j (0 <= j <= n).
    static MonotoneMap codegeneracy(int n, int j);
    /// The constant map with the given value.
    static MonotoneMap constant(int domain_size, int codomain_size, int value);

    int domain_size() const { return static_cast<int>(values_.size()); }
    int codomain_size() const { return codomain_size_; }
    int operator()(int i) const { return values_[static_cast<size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    /// "[0,0,1]" -- the value table only; sizes are clear from context.
    std::string to_string() const;

    friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;

  private:
    std::vector<int> values_;
    int codomain_size_;
};

/// Pointwise composition after . before; requires matching middle ordinal.
MonotoneMap compose(const MonotoneMap& after, const MonotoneMap& before);

/// The unique factorisation m = mono . epi with epi surjective and mono
/// injective.  Basis of Eilenberg-Zilber normalisation.
struct EpiMonoFactorisation {
    MonotoneMap epi;
    MonotoneMap mono;
};
EpiMonoFactorisation epi_mono_factor(const MonotoneMap& m);

/// All monotone maps between the given ordinals, in lexicographic order of
/// their value tables.
std::vector<MonotoneMap> all_monotone(int dom_size, int cod_size);

/// All monotone surjections, lexicographically ordered.
std::vector<MonotoneMap> all_surjections(int dom_size, int cod_size);

}  // namespace anodyne
