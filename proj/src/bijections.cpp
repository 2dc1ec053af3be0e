#include "schroeder/bijections.hpp"

#include <unordered_set>
#include <vector>

#include "schroeder/enumerate.hpp"
#include "schroeder/text.hpp"

namespace schroeder {

// ---------------------------------------------------------------------------
// Phi
// ---------------------------------------------------------------------------

WeightedTree phi(const SchroederTree& t) {
    if (t.is_leaf()) return WeightedTree::leaf();
    const auto& ch = t.children();
    const std::size_t l = ch.size();
    // Fold the child list from the right: the last two sons form a weight-1
    // node, every earlier son is prepended under a weight-2 node.
    WeightedTree acc = WeightedTree::node(Weight::One, phi(ch[l - 2]), phi(ch[l - 1]));
    for (std::size_t i = l - 2; i-- > 0;) acc = WeightedTree::node(Weight::Two, phi(ch[i]), acc);
    return acc;
}

namespace {

SchroederTree phi_inverse_rec(const WeightedTree& w) {
    if (w.is_leaf()) return SchroederTree::leaf();
    if (w.weight() == Weight::One)
        return SchroederTree::node({phi_inverse_rec(w.left()), phi_inverse_rec(w.right())});
    // weight 2: the right part is internal, so its image is a Schroeder node;
    // prepend the left image to its child list.
    SchroederTree rest = phi_inverse_rec(w.right());
    std::vector<SchroederTree> children;
    children.reserve(rest.children().size() + 1);
    children.push_back(phi_inverse_rec(w.left()));
    children.insert(children.end(), rest.children().begin(), rest.children().end());
    return SchroederTree::node(std::move(children));
}

}  // namespace

SchroederTree phi_inverse(const WeightedTree& w) {
    if (!is_well_weighted(w)) throw NotWellWeighted("phi_inverse requires a well-weighted tree");
    return phi_inverse_rec(w);
}

// ---------------------------------------------------------------------------
// Labels
// ---------------------------------------------------------------------------

std::string_view label_name(Label lab) {
    switch (lab) {
        case Label::L1: return "L1";
        case Label::L2: return "L2";
        case Label::R1: return "R1";
    }
    return "?";
}

std::optional<Label> label_from(std::string_view text) {
    if (text == "L1" || text == "1") return Label::L1;
    if (text == "L2" || text == "2") return Label::L2;
    if (text == "R1" || text == "3") return Label::R1;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sigma
// ---------------------------------------------------------------------------

FatherCase classify_father_case(const PointedTree& p) {
    if (!p.points_to_leaf()) return FatherCase::NotApplicable;
    if (p.point().is_root()) throw TooSmall("a pointed leaf needs a father; the tree is a single leaf");
    WeightedTree father = subtree_at(p.tree(), p.point().parent());
    Step side = p.point().last();
    if (father.weight() == Weight::One)
        return side == Step::Right ? FatherCase::CaseA : FatherCase::CaseB;
    if (side == Step::Left) return FatherCase::CaseC;
    throw MalformedInput("weight-2 node with a leaf right son escaped validation");
}

MarkedWeightedTree sigma_prime(Label lab, const PointedTree& p) {
    const WeightedTree& s = p.pointed_subtree();
    WeightedTree repl;
    NodeAddress new_point;
    if (lab == Label::R1) {
        repl = WeightedTree::node(Weight::One, s, WeightedTree::leaf());
        new_point = p.point().child(Step::Right);
    } else {
        repl = WeightedTree::node(lab == Label::L1 ? Weight::One : Weight::Two,
                                  WeightedTree::leaf(), s);
        new_point = p.point().child(Step::Left);
    }
    return MarkedWeightedTree{replace_subtree(p.tree(), p.point(), repl), std::move(new_point)};
}

SigmaImage::SigmaImage(ImageKind kind, PointedTree pointed)
    : kind_(kind), pointed_(std::move(pointed)) {
    bool leaf = pointed_.points_to_leaf();
    if (leaf != (kind_ == ImageKind::LeafPointed))
        throw MalformedInput("sigma image kind does not match the pointed node");
}

SigmaImage sigma(Label lab, const PointedTree& p) {
    if (p.leaf_count() < 2) throw TooSmall("sigma requires a tree with at least 2 leaves");
    if (lab != Label::L2 || !p.pointed_subtree().is_leaf()) {
        MarkedWeightedTree out = sigma_prime(lab, p);
        return SigmaImage(ImageKind::LeafPointed, PointedTree(out.tree, out.mark));
    }
    // L2 on a pointed leaf: sigma' is never well-weighted here, the father
    // case decides the repair. The father exists because the tree has >= 2
    // leaves.
    NodeAddress pa = p.point().parent();
    WeightedTree f = subtree_at(p.tree(), pa);
    switch (classify_father_case(p)) {
        case FatherCase::CaseA: {
            // [1; t', s] -> [2; t', [1; new leaf, s]]
            WeightedTree repl = WeightedTree::node(
                Weight::Two, f.left(),
                WeightedTree::node(Weight::One, WeightedTree::leaf(), f.right()));
            return SigmaImage(ImageKind::LeafPointed,
                              PointedTree(replace_subtree(p.tree(), pa, repl),
                                          pa.child(Step::Right).child(Step::Left)));
        }
        case FatherCase::CaseB: {
            // [1; s, t'] -> [2; t', [1; s, new leaf]]
            WeightedTree repl = WeightedTree::node(
                Weight::Two, f.right(),
                WeightedTree::node(Weight::One, f.left(), WeightedTree::leaf()));
            return SigmaImage(ImageKind::LeafPointed,
                              PointedTree(replace_subtree(p.tree(), pa, repl),
                                          pa.child(Step::Right).child(Step::Right)));
        }
        case FatherCase::CaseC: {
            // [2; s, t''] -> t'' alone, its root pointed; two leaves lost.
            return SigmaImage(ImageKind::InteriorPointed,
                              PointedTree(replace_subtree(p.tree(), pa, f.right()), pa));
        }
        default:
            throw MalformedInput("unreachable father case in sigma");
    }
}

std::pair<Label, PointedTree> sigma_inverse(const SigmaImage& img) {
    const PointedTree& u = img.pointed();
    if (img.kind() == ImageKind::InteriorPointed) {
        // Undo CaseC: wrap the pointed subtree as [2; new pointed leaf, t''].
        WeightedTree wrapped =
            WeightedTree::node(Weight::Two, WeightedTree::leaf(), u.pointed_subtree());
        return {Label::L2, PointedTree(replace_subtree(u.tree(), u.point(), wrapped),
                                       u.point().child(Step::Left))};
    }
    if (u.point().is_root()) throw MalformedInput("pointed leaf without a father");
    NodeAddress pa = u.point().parent();
    WeightedTree f = subtree_at(u.tree(), pa);
    Step side = u.point().last();

    // Promoting the sibling into f's place breaks well-weightedness exactly
    // when the sibling is a leaf landing as the right son of a weight-2 node;
    // those inputs are the repaired CaseA/CaseB images.
    auto promotion_blocked = [&](const WeightedTree& sibling) {
        if (!sibling.is_leaf() || pa.is_root()) return false;
        WeightedTree g = subtree_at(u.tree(), pa.parent());
        return g.weight() == Weight::Two && pa.last() == Step::Right;
    };

    if (f.weight() == Weight::One && side == Step::Right) {
        const WeightedTree& sibling = f.left();
        if (!promotion_blocked(sibling))
            return {Label::R1, PointedTree(replace_subtree(u.tree(), pa, sibling), pa)};
        // Undo CaseB: [2; t', [1; s, q]] -> [1; s, t'] with the point on s.
        NodeAddress ga = pa.parent();
        WeightedTree g = subtree_at(u.tree(), ga);
        WeightedTree orig = WeightedTree::node(Weight::One, sibling, g.left());
        return {Label::L2,
                PointedTree(replace_subtree(u.tree(), ga, orig), ga.child(Step::Left))};
    }
    if (f.weight() == Weight::One && side == Step::Left) {
        const WeightedTree& sibling = f.right();
        if (!promotion_blocked(sibling))
            return {Label::L1, PointedTree(replace_subtree(u.tree(), pa, sibling), pa)};
        // Undo CaseA: [2; t', [1; q, s]] -> [1; t', s] with the point on s.
        NodeAddress ga = pa.parent();
        WeightedTree g = subtree_at(u.tree(), ga);
        WeightedTree orig = WeightedTree::node(Weight::One, g.left(), sibling);
        return {Label::L2,
                PointedTree(replace_subtree(u.tree(), ga, orig), ga.child(Step::Right))};
    }
    if (f.weight() == Weight::Two && side == Step::Left) {
        // Plain L2 on an interior subtree; the sibling is interior because f
        // is well-weighted, so promotion is always safe.
        return {Label::L2, PointedTree(replace_subtree(u.tree(), pa, f.right()), pa)};
    }
    throw MalformedInput("pointed leaf as right son of a weight-2 node");
}

// ---------------------------------------------------------------------------
// Exhaustive checks
// ---------------------------------------------------------------------------

SigmaCheckReport check_sigma_bijection(int n) {
    if (n < 2) throw TooSmall("sigma is defined for n >= 2");
    SigmaCheckReport r;
    r.n = n;
    r.injective = true;
    r.forward_roundtrip = true;

    auto witness = [&r](const std::string& text) {
        if (r.first_counterexample.empty()) r.first_counterexample = text;
    };

    std::unordered_set<std::string> leaf_images, interior_images;
    PointedStream inputs(n, NodeFilter::All);
    while (auto p = inputs.next()) {
        for (Label lab : {Label::L1, Label::L2, Label::R1}) {
            ++r.pairs;
            SigmaImage img = sigma(lab, *p);
            auto& bucket =
                img.kind() == ImageKind::LeafPointed ? leaf_images : interior_images;
            if (!bucket.insert(serialize(img.pointed())).second) {
                r.injective = false;
                witness("duplicate image of (" + std::string(label_name(lab)) + ", " +
                        serialize(*p) + ")");
            }
            auto [lab_back, p_back] = sigma_inverse(img);
            if (lab_back != lab || !(p_back == *p)) {
                r.forward_roundtrip = false;
                witness("round trip broke on (" + std::string(label_name(lab)) + ", " +
                        serialize(*p) + ")");
            }
        }
    }
    r.leaf_images = leaf_images.size();
    r.interior_images = interior_images.size();

    r.covers_leaf_pointed = true;
    r.covers_interior_pointed = true;
    r.backward_roundtrip = true;

    std::uint64_t lt_total = 0;
    PointedStream lt(n + 1, NodeFilter::LeavesOnly);
    while (auto u = lt.next()) {
        ++lt_total;
        if (!leaf_images.count(serialize(*u))) {
            r.covers_leaf_pointed = false;
            witness("leaf-pointed tree not reached: " + serialize(*u));
        }
        SigmaImage img(ImageKind::LeafPointed, *u);
        auto [lab, p] = sigma_inverse(img);
        if (!(sigma(lab, p) == img)) {
            r.backward_roundtrip = false;
            witness("backward round trip broke on " + serialize(*u));
        }
    }
    if (lt_total != r.leaf_images) r.covers_leaf_pointed = false;

    std::uint64_t it_total = 0;
    PointedStream it(n - 1, NodeFilter::InteriorOnly);
    while (auto u = it.next()) {
        ++it_total;
        if (!interior_images.count(serialize(*u))) {
            r.covers_interior_pointed = false;
            witness("interior-pointed tree not reached: " + serialize(*u));
        }
        SigmaImage img(ImageKind::InteriorPointed, *u);
        auto [lab, p] = sigma_inverse(img);
        if (!(sigma(lab, p) == img)) {
            r.backward_roundtrip = false;
            witness("backward round trip broke on " + serialize(*u));
        }
    }
    if (it_total != r.interior_images) r.covers_interior_pointed = false;

    return r;
}

PhiCheckReport check_phi_bijection(int n) {
    PhiCheckReport r;
    r.n = n;
    r.leaf_counts_preserved = true;
    r.images_well_weighted = true;
    r.forward_roundtrip = true;

    auto witness = [&r](const std::string& text) {
        if (r.first_counterexample.empty()) r.first_counterexample = text;
    };

    std::unordered_set<std::string> image;
    SchroederStream schroeder(n);
    while (auto t = schroeder.next()) {
        ++r.trees;
        WeightedTree w = phi(*t);
        if (w.leaf_count() != t->leaf_count()) {
            r.leaf_counts_preserved = false;
            witness("leaf count changed on " + serialize(*t));
        }
        if (!is_well_weighted(w)) {
            r.images_well_weighted = false;
            witness("image not well-weighted: " + serialize(*t));
        }
        image.insert(serialize(w));
        if (!(phi_inverse(w) == *t)) {
            r.forward_roundtrip = false;
            witness("phi_inverse(phi(t)) != t for " + serialize(*t));
        }
    }

    r.backward_roundtrip = true;
    r.image_matches_enumeration = true;
    std::uint64_t well_weighted_total = 0;
    WellWeightedStream ww(n);
    while (auto w = ww.next()) {
        ++well_weighted_total;
        if (!image.count(serialize(*w))) {
            r.image_matches_enumeration = false;
            witness("well-weighted tree not reached: " + serialize(*w));
        }
        if (!(phi(phi_inverse(*w)) == *w)) {
            r.backward_roundtrip = false;
            witness("phi(phi_inverse(w)) != w for " + serialize(*w));
        }
    }
    if (well_weighted_total != image.size() || well_weighted_total != r.trees)
        r.image_matches_enumeration = false;

    return r;
}

}  // namespace schroeder
