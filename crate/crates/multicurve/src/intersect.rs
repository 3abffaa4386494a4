//! Minimal-position intersection combinatorics.
//!
//! A nontrivial class acts on the Cayley tree with an axis whose two ends
//! are eventually periodic points of the boundary. The fat-graph cyclic
//! order induces a circular order on boundary points, and two axes cross
//! exactly when their endpoint pairs are linked in that order. Intersection
//! points of taut representatives correspond to linked pairs of rotations,
//! normalized so that the first strand enters the axis overlap at the
//! basepoint; this yields one datum per minimal-position intersection point.

use crate::surface::{
    canonical_class, class_of, inv, Classified, ConjClass, Letter, Multiloop, Surface, Word,
};
use crate::{Error, Result};

/// A purely periodic boundary ray from the basepoint. The period must be a
/// rotation of a cyclically reduced word, so the infinite word is reduced.
#[derive(Debug, Clone)]
struct Ray {
    period: Vec<Letter>,
}

impl Ray {
    fn forward(w: &Word) -> Ray {
        debug_assert!(!w.is_empty());
        Ray {
            period: w.0.clone(),
        }
    }

    fn backward(w: &Word) -> Ray {
        debug_assert!(!w.is_empty());
        Ray {
            period: w.inverse().0,
        }
    }

    #[inline]
    fn at(&self, k: usize) -> Letter {
        self.period[k % self.period.len()]
    }

    fn period_len(&self) -> usize {
        self.period.len()
    }
}

/// First index where two rays differ; `None` means they are the same
/// boundary point. Two periodic rays agreeing past the sum of their periods
/// agree everywhere.
fn divergence(r1: &Ray, r2: &Ray) -> Option<usize> {
    let bound = r1.period_len() + r2.period_len();
    (0..bound).find(|&k| r1.at(k) != r2.at(k))
}

/// Circular orientation of three pairwise distinct boundary points: +1 if
/// (r1, r2, r3) is positively ordered for the fat-graph orientation.
fn ord3(s: &Surface, r1: &Ray, r2: &Ray, r3: &Ray) -> i8 {
    let d12 = divergence(r1, r2).expect("distinct rays");
    let d13 = divergence(r1, r3).expect("distinct rays");
    let d23 = divergence(r2, r3).expect("distinct rays");
    let m = d12.min(d13).min(d23);
    // In a tree the two smallest divergence depths coincide.
    if d12 == m && d13 == m && d23 == m {
        return s.cyclic_orientation(r1.at(m), r2.at(m), r3.at(m));
    }
    if d12 > m {
        debug_assert_eq!(d13, d23);
        let back = inv(r1.at(d12 - 1));
        s.cyclic_orientation(r1.at(d12), r2.at(d12), back)
    } else if d13 > m {
        debug_assert_eq!(d12, d23);
        let back = inv(r1.at(d13 - 1));
        -s.cyclic_orientation(r1.at(d13), r3.at(d13), back)
    } else {
        debug_assert_eq!(d12, d13);
        let back = inv(r2.at(d23 - 1));
        s.cyclic_orientation(r2.at(d23), r3.at(d23), back)
    }
}

/// Linking test for the axis of `a_rot` against the axis of `b_rot`, both
/// based at the basepoint. Returns the intersection sign if the endpoint
/// pairs alternate, `None` otherwise.
fn axes_linked(s: &Surface, a_rot: &Word, b_rot: &Word) -> Option<i8> {
    let fa = Ray::forward(a_rot);
    let pa = Ray::backward(a_rot);
    let fb = Ray::forward(b_rot);
    let pb = Ray::backward(b_rot);
    // Shared endpoints mean the axes merge at infinity and never cross.
    for x in [&fa, &pa] {
        for y in [&fb, &pb] {
            if divergence(x, y).is_none() {
                return None;
            }
        }
    }
    let o1 = ord3(s, &fa, &fb, &pa);
    let o2 = ord3(s, &fa, &pb, &pa);
    if o1 != o2 {
        Some(o1)
    } else {
        None
    }
}

/// Kind of intersection point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DatumKind {
    Mutual,
    SelfPoint,
}

/// Stable identifier for deterministic ordering of data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum DatumTag {
    /// Parallel-strand crossing of a proper power, indexed by the split.
    Power(u32),
    /// Crossing of two distinct axes, indexed by the rotation positions.
    Axis(u32, u32),
}

/// One minimal-position intersection point, with the word-level data needed
/// to smooth it: `left_factor` and `right_factor` are the two strands based
/// at the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionDatum {
    pub kind: DatumKind,
    pub left_factor: Word,
    pub right_factor: Word,
    pub sign: i8,
    pub tag: DatumTag,
}

fn cyclic_subword(w: &Word, from: usize, len: usize) -> Word {
    let n = w.len();
    Word((0..len).map(|k| w.0[(from + k) % n]).collect())
}

/// All intersection data between two oriented cyclically reduced words,
/// possibly representing the same class (then: crossings between two
/// parallel copies). Exposed so orientation-dependence can be tested.
pub fn oriented_mutual_data(s: &Surface, a: &Word, b: &Word) -> Result<Vec<IntersectionDatum>> {
    s.check_word(a)?;
    s.check_word(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::TrivialClass {
            context: "oriented_mutual_data".into(),
        });
    }
    let mut out = Vec::new();
    for i in 0..a.len() {
        let a_rot = a.rotate(i);
        let entry_dir = inv(*a_rot.0.last().unwrap());
        for j in 0..b.len() {
            let b_rot = b.rotate(j);
            // Entry normalization: the overlap of the two axes must not
            // extend behind the basepoint along the first strand.
            if entry_dir == b_rot.0[0] || entry_dir == inv(*b_rot.0.last().unwrap()) {
                continue;
            }
            if let Some(sign) = axes_linked(s, &a_rot, &b_rot) {
                out.push(IntersectionDatum {
                    kind: DatumKind::Mutual,
                    left_factor: a_rot.clone(),
                    right_factor: b_rot,
                    sign,
                    tag: DatumTag::Axis(i as u32, j as u32),
                });
            }
        }
    }
    out.sort_by_key(|d| d.tag);
    Ok(out)
}

/// One datum per minimal-position intersection point of two distinct
/// classes, deterministic given the canonical representatives.
pub fn linked_pairs(s: &Surface, a: &ConjClass, b: &ConjClass) -> Result<Vec<IntersectionDatum>> {
    if a == b {
        return Err(Error::SameClass);
    }
    oriented_mutual_data(s, a.word(), b.word())
}

/// Self-intersection data of an oriented cyclically reduced word.
pub fn oriented_self_data(s: &Surface, c: &Word) -> Result<Vec<IntersectionDatum>> {
    s.check_word(c)?;
    if c.is_empty() {
        return Err(Error::TrivialClass {
            context: "oriented_self_data".into(),
        });
    }
    let n = c.len();
    let mut out = Vec::new();

    // Parallel-strand crossings of a proper power p^k: the k strands close
    // up with a cyclic shift, giving k−1 extra points with factors p^t and
    // p^(k−t). Their handedness is a convention; the sign is fixed at +1.
    let period = c.primitive_period();
    let k = n / period;
    if k > 1 {
        let root = Word(c.0[..period].to_vec());
        for t in 1..k {
            out.push(IntersectionDatum {
                kind: DatumKind::SelfPoint,
                left_factor: root.power(t as i64),
                right_factor: root.power((k - t) as i64),
                sign: 1,
                tag: DatumTag::Power(t as u32),
            });
        }
    }

    // Crossings between distinct axes of the same word. Each unordered
    // crossing appears as exactly two entry-normalized ordered configs;
    // the partner of (i, j) is found by renormalizing at the second
    // strand's entry vertex of the axis overlap.
    let mut ordered: Vec<(usize, usize, i8)> = Vec::new();
    for i in 0..n {
        let a_rot = c.rotate(i);
        let entry_dir = inv(*a_rot.0.last().unwrap());
        for j in 0..n {
            if i == j {
                continue;
            }
            let b_rot = c.rotate(j);
            if entry_dir == b_rot.0[0] || entry_dir == inv(*b_rot.0.last().unwrap()) {
                continue;
            }
            if let Some(sign) = axes_linked(s, &a_rot, &b_rot) {
                ordered.push((i, j, sign));
            }
        }
    }
    let partner = |i: usize, j: usize| -> (usize, usize) {
        let a_rot = c.rotate(i);
        let b_rot = c.rotate(j);
        let fa = Ray::forward(&a_rot);
        if b_rot.0[0] == a_rot.0[0] {
            // Second strand traverses the overlap in the same direction,
            // so both strands enter at the basepoint.
            (j, i)
        } else {
            // Opposite direction: its entry sits at the far end of the
            // overlap, whose length is the agreement of the rays (always
            // shorter than the period for distinct axes).
            let pb = Ray::backward(&b_rot);
            let l = divergence(&fa, &pb).expect("distinct axes");
            debug_assert!(l < n);
            ((j + n - l) % n, (i + l) % n)
        }
    };
    let mut emitted: std::collections::BTreeSet<(usize, usize)> = Default::default();
    for &(i, j, _) in &ordered {
        if emitted.contains(&(i, j)) {
            continue;
        }
        let (pi, pj) = partner(i, j);
        if !ordered.iter().any(|&(x, y, _)| (x, y) == (pi, pj)) {
            return Err(Error::InvariantViolation(format!(
                "self datum ({}, {}) on {:?} has no partner ({}, {})",
                i, j, c, pi, pj
            )));
        }
        emitted.insert((i, j));
        emitted.insert((pi, pj));
        let (i, j) = (i, j).min((pi, pj));
        let sign = ordered
            .iter()
            .find(|&&(x, y, _)| (x, y) == (i, j))
            .map(|&(_, _, s)| s)
            .unwrap();
        let u = cyclic_subword(c, i, (j + n - i) % n);
        let v = cyclic_subword(c, j, (i + n - j) % n);
        out.push(IntersectionDatum {
            kind: DatumKind::SelfPoint,
            left_factor: u,
            right_factor: v,
            sign,
            tag: DatumTag::Axis(i as u32, j as u32),
        });
    }
    if emitted.len() != ordered.len() {
        return Err(Error::InvariantViolation(format!(
            "self data of {:?} did not pair up ({} configs, {} emitted)",
            c,
            ordered.len(),
            emitted.len()
        )));
    }
    out.sort_by_key(|d| d.tag);
    Ok(out)
}

/// One datum per self-intersection of a taut representative of `a`.
pub fn self_linked_pairs(s: &Surface, a: &ConjClass) -> Result<Vec<IntersectionDatum>> {
    oriented_self_data(s, a.word())
}

/// Geometric intersection number of two distinct classes.
pub fn geom_intersection(s: &Surface, a: &ConjClass, b: &ConjClass) -> Result<usize> {
    Ok(linked_pairs(s, a, b)?.len())
}

/// Crossing count between two components of a multiloop; equal classes are
/// two parallel copies of the same curve.
pub fn pair_crossings(s: &Surface, a: &ConjClass, b: &ConjClass) -> usize {
    oriented_mutual_data(s, a.word(), b.word())
        .expect("canonical words are valid")
        .len()
}

/// Self-intersection number of a class.
pub fn self_intersection(s: &Surface, a: &ConjClass) -> usize {
    oriented_self_data(s, a.word())
        .expect("canonical words are valid")
        .len()
}

/// A class is simple when its taut representative has no self-intersection.
pub fn is_simple(s: &Surface, a: &ConjClass) -> bool {
    self_intersection(s, a) == 0
}

/// Intersection number extended additively over two families of components.
pub fn family_intersection(s: &Surface, xs: &[ConjClass], ys: &[ConjClass]) -> usize {
    xs.iter()
        .map(|c| ys.iter().map(|d| pair_crossings(s, c, d)).sum::<usize>())
        .sum()
}

/// Total intersection number of a multiloop: all self-intersections plus
/// all pairwise crossings between components.
pub fn total_intersection(s: &Surface, m: &Multiloop) -> usize {
    let comps = m.components();
    let mut total = 0;
    for (idx, c) in comps.iter().enumerate() {
        total += self_intersection(s, c);
        for d in &comps[idx + 1..] {
            total += pair_crossings(s, c, d);
        }
    }
    total
}

/// One branch of a smoothing: the surviving multiloop plus the number of
/// trivial components that appeared (flagged, not dropped).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothedHalf {
    pub loops: Multiloop,
    pub trivial: usize,
}

fn push_classified(half: &mut SmoothedHalf, w: &Word) {
    match canonical_class(w) {
        Classified::Trivial => half.trivial += 1,
        Classified::Class(c) => half.loops.push(c),
    }
}

/// Smooth a multiloop at one of its intersection data, without the
/// strict-decrease verification. Used internally where the caller tracks
/// totals itself.
pub(crate) fn smooth_unchecked(
    m: &Multiloop,
    d: &IntersectionDatum,
) -> Result<(SmoothedHalf, SmoothedHalf)> {
    let mut rest = m.clone();
    match d.kind {
        DatumKind::Mutual => {
            let cl = class_of(&d.left_factor)?;
            let cr = class_of(&d.right_factor)?;
            rest.remove_one(&cl)?;
            rest.remove_one(&cr)?;
        }
        DatumKind::SelfPoint => {
            let c = class_of(&d.left_factor.concat(&d.right_factor))?;
            rest.remove_one(&c)?;
        }
    }
    let mut plus = SmoothedHalf {
        loops: rest.clone(),
        trivial: 0,
    };
    let mut minus = SmoothedHalf {
        loops: rest,
        trivial: 0,
    };
    match d.kind {
        DatumKind::Mutual => {
            push_classified(&mut plus, &d.left_factor.concat(&d.right_factor));
        }
        DatumKind::SelfPoint => {
            push_classified(&mut plus, &d.left_factor);
            push_classified(&mut plus, &d.right_factor);
        }
    }
    push_classified(
        &mut minus,
        &d.left_factor.concat(&d.right_factor.inverse()),
    );
    Ok((plus, minus))
}

/// Smooth a multiloop at one of its intersection data.
///
/// For a mutual point on strands u, v the branches are {uv} ∪ rest and
/// {uv⁻¹} ∪ rest; for a self point on a component uv they are {u, v} ∪ rest
/// and {uv⁻¹} ∪ rest. Both branches must strictly decrease the total
/// intersection number; a violation signals an intersection-algorithm bug.
pub fn smooth(
    s: &Surface,
    m: &Multiloop,
    d: &IntersectionDatum,
) -> Result<(SmoothedHalf, SmoothedHalf)> {
    let (plus, minus) = smooth_unchecked(m, d)?;
    let parent = total_intersection(s, m);
    for half in [&plus, &minus] {
        let child = total_intersection(s, &half.loops);
        if child >= parent {
            return Err(Error::InvariantViolation(format!(
                "smoothing did not decrease total intersection ({} -> {})",
                parent, child
            )));
        }
    }
    Ok((plus, minus))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t1p() -> Surface {
        Surface::once_punctured_torus()
    }

    fn s4p() -> Surface {
        Surface::four_punctured_sphere()
    }

    fn cl(s: &Surface, text: &str) -> ConjClass {
        class_of(&s.parse_word(text).unwrap()).unwrap()
    }

    #[test]
    fn torus_generators_cross_once() {
        let s = t1p();
        let data = linked_pairs(&s, &cl(&s, "a"), &cl(&s, "b")).unwrap();
        assert_eq!(data.len(), 1);
        assert_eq!(data[0].kind, DatumKind::Mutual);
    }

    #[test]
    fn boundary_class_is_disjoint_from_a() {
        let s = t1p();
        let data = linked_pairs(&s, &cl(&s, "a"), &cl(&s, "a b a' b'")).unwrap();
        assert!(data.is_empty());
    }

    #[test]
    fn sphere_figure_pair_crosses_twice() {
        let s = s4p();
        let data = linked_pairs(&s, &cl(&s, "x1 x2"), &cl(&s, "x2 x3")).unwrap();
        assert_eq!(data.len(), 2);
    }

    #[test]
    fn self_intersections_on_presets() {
        let s = t1p();
        assert_eq!(self_intersection(&s, &cl(&s, "a")), 0);
        assert_eq!(self_intersection(&s, &cl(&s, "a a")), 1);
        assert_eq!(self_intersection(&s, &cl(&s, "a b a' b'")), 0);
        assert!(is_simple(&s, &cl(&s, "a")));
        assert!(!is_simple(&s, &cl(&s, "a a")));
        assert!(is_simple(&s, &cl(&s, "a b a' b'")));
    }

    #[test]
    fn puncture_classes_disjoint_on_sphere() {
        let s = s4p();
        assert_eq!(geom_intersection(&s, &cl(&s, "x1"), &cl(&s, "x2")).unwrap(), 0);
        assert_eq!(geom_intersection(&s, &cl(&s, "x1"), &cl(&s, "x3")).unwrap(), 0);
        assert_eq!(
            geom_intersection(&s, &cl(&s, "x1"), &cl(&s, "x1 x2 x3")).unwrap(),
            0
        );
    }

    #[test]
    fn same_class_is_rejected() {
        let s = t1p();
        assert_eq!(
            linked_pairs(&s, &cl(&s, "a"), &cl(&s, "a")),
            Err(Error::SameClass)
        );
    }

    #[test]
    fn smooth_torus_pair() {
        let s = t1p();
        let m = Multiloop::new(vec![cl(&s, "a"), cl(&s, "b")]);
        let data = linked_pairs(&s, &cl(&s, "a"), &cl(&s, "b")).unwrap();
        let (plus, minus) = smooth(&s, &m, &data[0]).unwrap();
        let expect_plus = Multiloop::new(vec![cl(&s, "a b")]);
        let expect_minus = Multiloop::new(vec![cl(&s, "a b'")]);
        let got = [plus.loops.clone(), minus.loops.clone()];
        assert!(got.contains(&expect_plus) && got.contains(&expect_minus));
        assert_eq!(plus.trivial + minus.trivial, 0);
    }

    #[test]
    fn smooth_square_of_simple_flags_trivial() {
        let s = t1p();
        let a2 = cl(&s, "a a");
        let m = Multiloop::new(vec![a2.clone()]);
        let data = self_linked_pairs(&s, &a2).unwrap();
        assert_eq!(data.len(), 1);
        assert_eq!(data[0].tag, DatumTag::Power(1));
        let (plus, minus) = smooth(&s, &m, &data[0]).unwrap();
        assert_eq!(plus.loops, Multiloop::new(vec![cl(&s, "a"), cl(&s, "a")]));
        assert_eq!(plus.trivial, 0);
        assert!(minus.loops.is_empty());
        assert_eq!(minus.trivial, 1);
    }

    #[test]
    fn stale_datum_detected() {
        let s = t1p();
        let data = linked_pairs(&s, &cl(&s, "a"), &cl(&s, "b")).unwrap();
        let m = Multiloop::new(vec![cl(&s, "a")]);
        assert!(matches!(
            smooth(&s, &m, &data[0]),
            Err(Error::StaleDatum(_))
        ));
    }

    #[test]
    fn sign_flips_under_orientation_reversal() {
        let s = t1p();
        let a = cl(&s, "a");
        let b = cl(&s, "b");
        let fwd = oriented_mutual_data(&s, a.word(), b.word()).unwrap();
        let rev = oriented_mutual_data(&s, a.word(), &b.word().inverse()).unwrap();
        assert_eq!(fwd.len(), rev.len());
        let mut f: Vec<i8> = fwd.iter().map(|d| d.sign).collect();
        let mut r: Vec<i8> = rev.iter().map(|d| -d.sign).collect();
        f.sort();
        r.sort();
        assert_eq!(f, r);
    }

    #[test]
    fn symmetry_of_intersection() {
        let s = s4p();
        let pairs = [
            ("x1 x2", "x2 x3"),
            ("x1 x2 x3 x2'", "x2 x3"),
            ("x1 x3", "x1 x2"),
            ("x1 x2' x3", "x2 x1"),
        ];
        for (u, v) in pairs {
            let a = cl(&s, u);
            let b = cl(&s, v);
            if a == b {
                continue;
            }
            assert_eq!(
                geom_intersection(&s, &a, &b).unwrap(),
                geom_intersection(&s, &b, &a).unwrap(),
                "asymmetry for {} vs {}",
                u,
                v
            );
        }
    }

    #[test]
    fn power_self_counts() {
        let s = t1p();
        // A primitive simple curve traversed k times has k−1 self-points.
        assert_eq!(self_intersection(&s, &cl(&s, "a a a")), 2);
        // Parallel copies of a figure-eight class cross twice per self-point.
        let fig8 = cl(&s, "a b a b'");
        let si = self_intersection(&s, &fig8);
        assert_eq!(pair_crossings(&s, &fig8, &fig8), 2 * si);
    }
}
