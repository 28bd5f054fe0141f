#pragma once

#include <memory>
#include <mutex>

#include "jgpi/component.hpp"
#include "jgpi/models.hpp"

namespace jgpi {

/// Generator sets for graded T-ideals. NonscalarJ2 is identities (1)-(5) of
/// the nonscalar grading, ScalarB is {(y,x1,x2)}, ScalarBn adds g_n.
/// JordanOnly is the Jordan T-ideal itself (the relations dividing the free
/// commutative nonassociative algebra down to the free Jordan algebra).
struct GenSpec {
    enum class Id { NonscalarJ2, ScalarB, ScalarBn, JordanOnly };
    Id id = Id::NonscalarJ2;
    int n = 0;  // ScalarBn only

    static GenSpec nonscalar_j2() { return {Id::NonscalarJ2, 0}; }
    static GenSpec scalar_b() { return {Id::ScalarB, 0}; }
    static GenSpec scalar_bn(int n) { return {Id::ScalarBn, n}; }
    static GenSpec jordan_only() { return {Id::JordanOnly, 0}; }

    std::string key() const;
};

struct ModelSpec {
    enum class Kind { J2Nonscalar, BnScalar };
    Kind kind = Kind::J2Nonscalar;
    int n = 0;
    GramSpec gram;

    static ModelSpec j2_nonscalar() { return {}; }
    static ModelSpec bn_scalar(int n, GramSpec g = GramSpec::identity()) {
        return {Kind::BnScalar, n, std::move(g)};
    }

    std::string key() const;
};

/// Multilinear generator template: a polynomial with its substitution slots
/// (sorted variables). The first sym_prefix slots are mutually symmetric,
/// which cuts duplicate instances during enumeration.
struct GenTemplate {
    JordanPoly poly;
    std::vector<VarName> slots;
    int sym_prefix = 0;
    std::string label;
};

/// Half the full linearization of (x^2 y)x - x^2 (yx): multilinear in the
/// placeholder slots x1,x2,x3 (symmetric) and x4; spans the same
/// consequences over Q as the Jordan identity itself.
const GenTemplate& jordan_linearized_template();

/// Parity-instantiated generator templates (Jordan not included).
std::vector<GenTemplate> concrete_generators(const GenSpec& gens);

enum class Modulus { FreeNonassoc, FreeJordan, RelFreeL };

/// A multidegree component together with the row-echelon relation space of
/// the chosen modulus; the non-pivot monomials form a basis of the quotient.
struct ComponentBasis {
    MultiDegree degree;
    Modulus modulus = Modulus::FreeNonassoc;
    std::vector<Monomial> monomials;
    std::vector<SparseVec> relation_rows;
    std::vector<Monomial> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

struct CompareReport {
    MultiDegree degree;
    int dim_free_nonassoc = 0;
    int dim_free_jordan = 0;
    int dim_ideal = 0;       // of the T-ideal component inside the free Jordan component
    int dim_identities = 0;  // of the graded-identity component, same ambient
    bool sound = false;      // every ideal row evaluates to zero (I subset T)
    bool equal = false;
    std::optional<JordanPoly> counterexample;  // element of T \ I when unequal
};

/// Computes multidegree components of graded T-ideals and of graded-identity
/// ideals, and decides membership and equality. All row spaces live in the
/// coordinates of the free commutative nonassociative component; the Jordan
/// relations are always part of an ideal row space, so equality against
/// evaluation kernels can be read off there directly.
class Engine {
  public:
    explicit Engine(int degree_cap = 7) : cap_(degree_cap) {}

    int degree_cap() const { return cap_; }

    /// Canonical d only (as produced by canonical_multidegree).
    std::shared_ptr<const RowSpace> ideal_rows(const GenSpec& gens, const MultiDegree& d);

    /// Ideal component rows as polynomials, in the naming of the given d.
    std::vector<JordanPoly> ideal_row_polys(const GenSpec& gens, const MultiDegree& d);

    /// Membership of p in the graded T-ideal of gens (inside the free Jordan
    /// algebra); decided componentwise for non-multihomogeneous p.
    bool is_member(const JordanPoly& p, const GenSpec& gens);

    /// Canonical residue of a multihomogeneous p modulo the ideal component.
    JordanPoly reduce_mod_ideal(const JordanPoly& p, const GenSpec& gens);

    struct EvalData {
        std::vector<SparseVec> rows;  // generic evaluation per monomial, shared columns
        int rank = 0;
    };
    /// Canonical d only.
    std::shared_ptr<const EvalData> eval_data(const ModelSpec& model, const MultiDegree& d);

    /// Kernel of the generic evaluation map on the free nonassociative
    /// component (contains the Jordan relations); d in any naming.
    std::vector<JordanPoly> identity_kernel(const ModelSpec& model, const MultiDegree& d);

    /// Dimension of the graded-identity component inside the free Jordan
    /// component at d, without materializing the kernel.
    int identity_dim(const ModelSpec& model, const MultiDegree& d);

    CompareReport compare(const GenSpec& gens, const ModelSpec& model, const MultiDegree& d);

    int free_jordan_dim(const MultiDegree& d);

    ComponentBasis component_basis(const MultiDegree& d, Modulus modulus,
                                   const GenSpec* gens = nullptr);

    void check_degree(const MultiDegree& d) const {
        if (d.total() > cap_)
            throw Error("degree bound exceeded: " + std::to_string(d.total()) + " > " +
                        std::to_string(cap_));
    }

  private:
    std::shared_ptr<const RowSpace> rows_canonical(const GenSpec& gens, const MultiDegree& d);
    void instances_into(const GenTemplate& g, const MultiDegree& d, const FreeComponent& fc,
                        RowSpace& rs);

    int cap_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const RowSpace>> ideal_cache_;
    std::map<std::string, std::shared_ptr<const EvalData>> eval_cache_;
};

/// Enumerates canonical multidegrees (one representative per parity-
/// preserving renaming class): pairs of partitions for the even and odd
/// exponents, ordered by (total degree, partition pair).
std::vector<MultiDegree> canonical_multidegrees(int max_total, int max_odd_vars = -1);

}  // namespace jgpi
