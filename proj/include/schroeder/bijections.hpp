#ifndef SCHROEDER_BIJECTIONS_HPP
#define SCHROEDER_BIJECTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "schroeder/trees.hpp"

namespace schroeder {

// ---------------------------------------------------------------------------
// Phi: Schroeder trees <-> well-weighted trees, leaf-count preserving.
// A two-son node becomes a weight-1 node; a node with more sons becomes a
// weight-2 node over its first son and the rest.
// ---------------------------------------------------------------------------

WeightedTree phi(const SchroederTree& t);

// Inverse of phi. A weight-2 node prepends its left part to the child list
// of its (necessarily internal) right part. Throws NotWellWeighted.
SchroederTree phi_inverse(const WeightedTree& w);

// ---------------------------------------------------------------------------
// Sigma: the three-way leaf insertion on pointed trees.
// ---------------------------------------------------------------------------

enum class Label { L1, L2, R1 };

std::string_view label_name(Label lab);
std::optional<Label> label_from(std::string_view text);

// Shape of the father of a pointed leaf: weight-1 with the leaf as right son
// (CaseA), weight-1 with it as left son (CaseB), weight-2 with it as left son
// (CaseC; the sibling is then necessarily interior). NotApplicable when the
// pointed node is interior. A weight-2 father with a pointed right son cannot
// occur in a well-weighted tree and throws MalformedInput.
enum class FatherCase { CaseA, CaseB, CaseC, NotApplicable };

FatherCase classify_father_case(const PointedTree& p);

// Raw insertion: L1/L2 replace the pointed subtree s by a weight-1/weight-2
// node with a new pointed leaf as left son and s as right son; R1 uses
// weight 1 with s on the left and the new pointed leaf on the right. The
// result is not well-weighted exactly when lab = L2 and s is a leaf.
MarkedWeightedTree sigma_prime(Label lab, const PointedTree& p);

enum class ImageKind { LeafPointed, InteriorPointed };

// A well-weighted pointed tree tagged by whether the point sits on a leaf
// (n+1 leaves relative to sigma's input) or an interior node (n-1 leaves).
class SigmaImage {
public:
    SigmaImage(ImageKind kind, PointedTree pointed);

    ImageKind kind() const { return kind_; }
    const PointedTree& pointed() const { return pointed_; }

    friend bool operator==(const SigmaImage& a, const SigmaImage& b) {
        return a.kind_ == b.kind_ && a.pointed_ == b.pointed_;
    }

private:
    ImageKind kind_;
    PointedTree pointed_;
};

// The repaired insertion: equals sigma_prime whenever that is already
// well-weighted; otherwise the pointed subtree is a leaf and the father
// case decides a local repair (CaseA/CaseB) or the contraction onto the
// sibling (CaseC, losing two leaves). Throws TooSmall when the input has a
// single leaf.
SigmaImage sigma(Label lab, const PointedTree& p);

// Two-sided inverse of sigma, reconstructed by deletion-promotion with a
// well-weightedness disambiguator. Throws MalformedInput when no branch
// applies.
std::pair<Label, PointedTree> sigma_inverse(const SigmaImage& img);

// ---------------------------------------------------------------------------
// Exhaustive verification
// ---------------------------------------------------------------------------

struct SigmaCheckReport {
    int n = 0;
    std::uint64_t pairs = 0;            // 3 (2n-1) s(n) inputs
    std::uint64_t leaf_images = 0;      // should be (n+1) s(n+1)
    std::uint64_t interior_images = 0;  // should be (n-2) s(n-1)
    bool injective = false;
    bool covers_leaf_pointed = false;      // image restricted to leaves = LT(n+1)
    bool covers_interior_pointed = false;  // image restricted to interiors = IT(n-1)
    bool forward_roundtrip = false;        // sigma_inverse(sigma(x)) == x
    bool backward_roundtrip = false;       // sigma(sigma_inverse(u)) == u
    std::string first_counterexample;      // serialized witness of the first failure

    bool ok() const {
        return injective && covers_leaf_pointed && covers_interior_pointed &&
               forward_roundtrip && backward_roundtrip;
    }
};

// Applies sigma to every pair in {L1,L2,R1} x PT(n) and checks injectivity,
// exact coverage of LT(n+1) and IT(n-1), and both round trips. Practical for
// n <= 9.
SigmaCheckReport check_sigma_bijection(int n);

struct PhiCheckReport {
    int n = 0;
    std::uint64_t trees = 0;  // s(n)
    bool leaf_counts_preserved = false;
    bool images_well_weighted = false;
    bool forward_roundtrip = false;   // phi_inverse(phi(t)) == t
    bool backward_roundtrip = false;  // phi(phi_inverse(w)) == w
    bool image_matches_enumeration = false;
    std::string first_counterexample;  // serialized witness of the first failure

    bool ok() const {
        return leaf_counts_preserved && images_well_weighted && forward_roundtrip &&
               backward_roundtrip && image_matches_enumeration;
    }
};

// Round-trips phi in both directions over all trees with n leaves and checks
// that the image of the Schroeder enumeration is exactly the well-weighted
// enumeration.
PhiCheckReport check_phi_bijection(int n);

}  // namespace schroeder

#endif  // SCHROEDER_BIJECTIONS_HPP
