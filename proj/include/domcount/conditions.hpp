#ifndef DOMCOUNT_CONDITIONS_HPP
#define DOMCOUNT_CONDITIONS_HPP

// Coloring conditions: families of multisets over a finite color set K,
// given as membership predicates, plus the legal-function counters N(r, L)
// and their weighted versions, and the integer-weight blow-up reduction.

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "domcount/exact.hpp"

namespace domcount {

// A multiset over colors 0..k-1, stored as repetition counts.
struct ColorMultiset {
    std::vector<int> counts;

    int colors() const { return static_cast<int>(counts.size()); }
    int size() const;
    int distinct() const;
};

class ColoringCondition {
public:
    enum class Kind { dominating, proper, rainbow, at_least_count, explicit_list, projected };

    // Multisets over {0,1} containing at least one 1; legal closed
    // neighborhood colorings under this condition are dominating sets.
    static ColoringCondition dominating();
    // Multisets over [q] with at least two different colors.
    static ColoringCondition proper(int q);
    // Multisets over [q] with no repeated color.
    static ColoringCondition rainbow(int q);
    // Multisets over [k] with at least min_count copies of color.
    static ColoringCondition at_least_count(int k, int color, int min_count);
    // Arbitrary condition: allowed count-vectors listed per multiset size.
    // Multisets of unlisted sizes are not in the family.
    static ColoringCondition explicit_list(int k,
                                           std::map<int, std::set<std::vector<int>>> per_size);
    // Condition on a blown-up color set: a multiset is legal iff its
    // projection to the base colors is legal for the base condition.
    static ColoringCondition projected(std::shared_ptr<const ColoringCondition> base,
                                       std::vector<int> projection);

    // Loads an explicit-list condition from a JSON file:
    //   {"colors": k, "sizes": {"r": [[c_0,...,c_{k-1}], ...], ...}}
    static ColoringCondition from_json_file(const std::string& path);

    bool allows(const ColorMultiset& m) const;
    int colors() const { return k_; }
    Kind kind() const { return kind_; }
    std::string describe() const;

private:
    ColoringCondition(Kind kind, int k) : kind_(kind), k_(k) {}

    Kind kind_;
    int k_;
    int color_ = 0;
    int min_count_ = 0;
    std::map<int, std::set<std::vector<int>>> allowed_;
    std::shared_ptr<const ColoringCondition> base_;
    std::vector<int> projection_;  // new color -> base color
};

// Positive weight per color.
struct Activation {
    std::vector<BigRational> weights;

    static Activation uniform(int k);
    // Parses a comma-separated list of "p" or "p/q" literals.
    static Activation parse(const std::string& csv);

    int colors() const { return static_cast<int>(weights.size()); }
    bool all_integral() const;
    void validate() const;  // throws unless every weight is > 0
};

// Number of functions from [size] whose image is exactly the given multiset.
BigCount multinomial(int size, const ColorMultiset& counts);

// N(r, L): functions [r] -> K with legal multiset image, as the sum of
// multinomial coefficients over legal multisets of size r.
BigCount legal_function_count(int r, int k, const ColoringCondition& condition);

// N^lambda(r, L): same sum with each multiset weighted by the product of its
// colors' activations.
BigRational weighted_legal_function_count(int r, const ColoringCondition& condition,
                                          const Activation& lambda);

struct BlowupResult {
    int colors;                    // |K'|
    ColoringCondition condition;   // L'
    std::vector<int> projection;   // color of K' -> original color
};

// Clears integer weights into color multiplicity: K' has lambda(x) copies of
// each x, and L' accepts exactly the multisets whose projection is in L, so
// N(s, L') = N^lambda(s, L) for every s.
BlowupResult blowup(const ColoringCondition& condition, const Activation& lambda);

}  // namespace domcount

#endif
