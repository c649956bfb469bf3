#ifndef STELLATE_TORIC_HPP
#define STELLATE_TORIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stellate/recognizers.hpp"
#include "stellate/stable_sets.hpp"

namespace stellate {

inline constexpr int kDefaultGbVarBudget = 200;
inline constexpr long long kDefaultGbStepBudget = 4'000'000'000LL;
inline constexpr int kDefaultFiberDegree = 4;

// Monomial in K[x_1..x_m], one variable per stable set; coefficients never
// matter (everything here is a difference of two monomials).
struct Monomial {
    std::vector<std::int16_t> e;
    int deg = 0;

    static Monomial one(int m) { return Monomial{std::vector<std::int16_t>(static_cast<std::size_t>(m), 0), 0}; }
    int vars() const { return static_cast<int>(e.size()); }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& a, const Monomial& b); // a / b, assumes b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
bool mono_squarefree(const Monomial& a);

// lead - tail with coefficients +1/-1; lead != tail.  Oriented so that
// lead > tail under the order in force when it was produced.
struct Binomial {
    Monomial lead, tail;
    int degree() const { return lead.deg; }
    bool operator==(const Binomial& o) const { return lead == o.lead && tail == o.tail; }
};

// Graded reverse lexicographic order with a priority permutation:
// priority[0] is the cheapest variable.  deg u > deg v makes u bigger; on equal
// degrees, scan variables cheapest-first and the side with the SMALLER exponent
// at the first difference is the bigger monomial.
struct MonomialOrder {
    std::vector<int> priority;

    static MonomialOrder grevlex(int m);                      // identity priority
    static MonomialOrder grevlex_cheapest(int m, int v);      // v first, rest ascending
    static MonomialOrder from_priority(std::vector<int> priority);

    int vars() const { return static_cast<int>(priority.size()); }
    int cmp(const Monomial& u, const Monomial& v) const; // -1, 0, 1
    bool greater(const Monomial& u, const Monomial& v) const { return cmp(u, v) > 0; }
};

struct GroebnerBasis {
    MonomialOrder order;
    std::vector<Binomial> elements; // reduced GB: sorted ascending by lead
};

struct ToricOptions {
    int var_budget = kDefaultGbVarBudget;
    long long step_budget = kDefaultGbStepBudget;
};

// Z-basis of the integer kernel of the (rows x cols) matrix, via exact
// unimodular column reduction.
std::vector<std::vector<long long>> integer_kernel_basis(const std::vector<std::vector<long long>>& matrix);

// rho-sum of a monomial: per-vertex count over the multiset of stable sets.
std::vector<int> rho_sum(const StableSetIndex& idx, const Monomial& mono);
// Both sides of equal degree and equal rho-sum <=> the binomial lies in the
// toric ideal.  The independent membership test used by tests and assertions.
bool binomial_in_ideal(const StableSetIndex& idx, const Binomial& b);

// All binomials x_i x_j - x_k x_l between distinct degree-2 monomials with the
// same rho-sum, oriented by `order`, deterministic order.
std::vector<Binomial> quadratic_binomials(const StableSetIndex& idx, const MonomialOrder& order);

// Reduced Groebner basis of the toric ideal: integer-kernel lattice basis, one
// saturation round per variable (grevlex with that variable cheapest), then
// completion and autoreduction under the requested order.
GroebnerBasis toric_groebner(const StableSetIndex& idx, const MonomialOrder& order,
                             const ToricOptions& opts = {});

// Plain Buchberger completion + autoreduction of the given generators (no
// saturation tricks; stays inside the ideal the generators span).
GroebnerBasis buchberger_closure(std::vector<Binomial> gens, const MonomialOrder& order,
                                 long long step_budget = kDefaultGbStepBudget);

Monomial normal_form(Monomial mono, const GroebnerBasis& gb);
// nullopt when the binomial reduces to zero.
std::optional<Binomial> normal_form(const Binomial& b, const GroebnerBasis& gb);

struct InitialIdealProfile {
    int max_degree = 0;
    bool all_quadratic = true;
    bool all_squarefree = true;
};
InitialIdealProfile initial_ideal_profile(const GroebnerBasis& gb);

struct QuadGenResult {
    bool quadratically_generated = false;
    std::optional<Binomial> witness; // a GB element (degree >= 3) outside the quadratic part
    GroebnerBasis gb;                // reduced GB under the order used for the test
};
// Is the toric ideal generated by its quadratic binomials?  Compares the full
// reduced GB against the Buchberger closure of the quadratic part.
QuadGenResult is_quadratically_generated(const StableSetIndex& idx, const ToricOptions& opts = {});

// ---- perfectly orderable route (squarefree quadratic initial ideals) ----

struct Theorem32Setup {
    Graph relabeled;             // vertices renumbered so 0,1,2,... is the perfect order
    std::vector<int> vertex_map; // relabeled vertex -> original vertex
    StableSetIndex index;        // stable sets sorted descending by rho, lexicographically
    MonomialOrder order;         // grevlex with identity priority on that listing
};
Theorem32Setup theorem32_order(const Graph& g, const PerfectOrdering& po,
                               int stable_set_cap = kDefaultStableSetCap);

// First-fit stable set: scan the support ascending, keep any vertex with no
// kept neighbour (the lexicographically largest stable subset of `support`).
vset greedy_stable_set(const Graph& g, vset support);

// The binomial x_i x_j - x_k x_l of the structural construction: S_k is the
// greedy stable set on S_i | S_j and rho(S_l) = rho(S_i)+rho(S_j)-rho(S_k).
// nullopt when k == i (the zero binomial).
std::optional<Binomial> fij_binomial(const Theorem32Setup& setup, int i, int j);

// ---- fiber oracle (independent route to quadratic generation) ----

struct Fiber {
    std::vector<Monomial> monomials; // all degree-d monomials with a fixed rho-sum
};
Fiber fiber(const StableSetIndex& idx, const std::vector<int>& target, int degree,
            long long step_budget = kDefaultGbStepBudget);

// Connected components of the fiber under quadratic moves; each component lists
// indices into fiber.monomials.
std::vector<std::vector<int>> fiber_components(const StableSetIndex& idx, const Fiber& f);

// True iff every fiber of each degree in 3..max_degree is connected under
// quadratic moves; ground truth for is_quadratically_generated when max_degree
// is at least the top degree of any generating set.
bool quadratic_generation_oracle(const StableSetIndex& idx, int max_degree = kDefaultFiberDegree,
                                 long long step_budget = kDefaultGbStepBudget);

// One binomial per connected component of the difference graph on
// (S_i \ S_j) u (S_j \ S_i): swap the component between the two sets.
std::vector<Binomial> component_swap_binomials(const StableSetIndex& idx, int i, int j,
                                               const MonomialOrder& order);

} // namespace stellate

#endif
