//! The character-ring computations: expansion of multiloops into the
//! multicurve basis, products of basis elements, and the Goldman Poisson
//! bracket.
//!
//! Everything follows trace conventions: the trivial loop evaluates to 2
//! and the rewrite rule is t_u·t_v = t_{uv} + t_{uv⁻¹}. Coefficients are
//! arbitrary-precision integers.

use crate::intersect::{
    self, linked_pairs, oriented_mutual_data, smooth_unchecked, total_intersection,
    IntersectionDatum,
};
use crate::surface::{class_of, ConjClass, Multiloop, Surface, Word};
use crate::{Error, Result};
use num::bigint::BigInt;
use num::traits::{One, Zero};
use rand::Rng;
use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A multiset of pairwise-disjoint simple classes; the basis index set of
/// the character ring. May be empty (the unit).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multicurve {
    components: Vec<ConjClass>,
}

impl Multicurve {
    /// Validate simplicity and pairwise disjointness against a surface.
    pub fn new(s: &Surface, mut components: Vec<ConjClass>) -> Result<Multicurve> {
        components.sort();
        for c in &components {
            if !intersect::is_simple(s, c) {
                return Err(Error::Precondition(format!(
                    "component {} is not simple",
                    s.format_class(c)
                )));
            }
        }
        for (i, c) in components.iter().enumerate() {
            for d in &components[i + 1..] {
                if c != d && intersect::pair_crossings(s, c, d) != 0 {
                    return Err(Error::Precondition(format!(
                        "components {} and {} intersect",
                        s.format_class(c),
                        s.format_class(d)
                    )));
                }
            }
        }
        Ok(Multicurve { components })
    }

    /// Wrap a multiloop already known to satisfy the invariants (the base
    /// case of the expansion, where no intersection data remain).
    pub(crate) fn from_resolved(m: Multiloop) -> Multicurve {
        Multicurve {
            components: m.components().to_vec(),
        }
    }

    pub fn empty() -> Multicurve {
        Multicurve::default()
    }

    pub fn components(&self) -> &[ConjClass] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn as_multiloop(&self) -> Multiloop {
        Multiloop::new(self.components.clone())
    }

    pub fn union(&self, other: &Multicurve) -> Multiloop {
        self.as_multiloop().union(&other.as_multiloop())
    }

    /// Multicurve with one copy of `c` removed.
    pub fn without_one(&self, idx: usize) -> Multicurve {
        let mut v = self.components.clone();
        v.remove(idx);
        Multicurve { components: v }
    }
}

/// A finite integer combination of multicurves; no zero coefficients are
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SkeinElement {
    terms: BTreeMap<Multicurve, BigInt>,
}

impl SkeinElement {
    pub fn zero() -> SkeinElement {
        SkeinElement::default()
    }

    /// The unit t_∅ = 1.
    pub fn unit() -> SkeinElement {
        SkeinElement::single(Multicurve::empty(), BigInt::one())
    }

    pub fn single(mu: Multicurve, coeff: BigInt) -> SkeinElement {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mu, coeff);
        }
        SkeinElement { terms }
    }

    pub fn basis(mu: Multicurve) -> SkeinElement {
        SkeinElement::single(mu, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multicurve, &BigInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Multicurve> {
        self.terms.keys()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mu: &Multicurve) -> BigInt {
        self.terms.get(mu).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_scaled(&mut self, other: &SkeinElement, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for (mu, c) in &other.terms {
            let entry = self.terms.entry(mu.clone()).or_insert_with(BigInt::zero);
            *entry += c * k;
            if entry.is_zero() {
                self.terms.remove(mu);
            }
        }
    }

    pub fn plus(&self, other: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        out.add_scaled(other, &BigInt::one());
        out
    }

    pub fn minus(&self, other: &SkeinElement) -> SkeinElement {
        let mut out = self.clone();
        out.add_scaled(other, &(-BigInt::one()));
        out
    }

    pub fn scaled(&self, k: &BigInt) -> SkeinElement {
        let mut out = SkeinElement::zero();
        out.add_scaled(self, k);
        out
    }

    /// Render in `2·t[δ] - 2·t[γ]` style with surface generator names.
    pub fn pretty(&self, s: &Surface) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mu, c)) in self.terms.iter().enumerate() {
            let negative = c.sign() == num::bigint::Sign::Minus;
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag = c.magnitude();
            if mu.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&format!("{}·", mag));
                }
                out.push_str(&format!(
                    "t[{}]",
                    mu.components()
                        .iter()
                        .map(|c| s.format_class(c))
                        .collect::<Vec<_>>()
                        .join(", ")
                ));
            }
        }
        out
    }
}

impl fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} terms", self.terms.len())
    }
}

/// Expansion context: a surface plus a memo table keyed by multiloop.
pub struct Expander<'a> {
    surface: &'a Surface,
    cache: RefCell<HashMap<Multiloop, SkeinElement>>,
    totals: RefCell<HashMap<Multiloop, usize>>,
}

fn two_pow(n: usize) -> BigInt {
    BigInt::one() << n
}

impl<'a> Expander<'a> {
    pub fn new(surface: &'a Surface) -> Expander<'a> {
        Expander {
            surface,
            cache: RefCell::new(HashMap::new()),
            totals: RefCell::new(HashMap::new()),
        }
    }

    pub fn surface(&self) -> &Surface {
        self.surface
    }

    fn total(&self, m: &Multiloop) -> usize {
        if let Some(&t) = self.totals.borrow().get(m) {
            return t;
        }
        let t = total_intersection(self.surface, m);
        self.totals.borrow_mut().insert(m.clone(), t);
        t
    }

    /// Pick the datum to resolve: the lexicographically first datum of the
    /// component with the most self-intersections, falling back to the
    /// first intersecting component pair once all components are simple.
    fn choose_datum(&self, m: &Multiloop) -> Result<Option<IntersectionDatum>> {
        let comps = m.components();
        let mut best: Option<(usize, Vec<IntersectionDatum>)> = None;
        for c in comps {
            let data = intersect::oriented_self_data(self.surface, c.word())?;
            if data.is_empty() {
                continue;
            }
            let better = match &best {
                None => true,
                Some((n, _)) => data.len() > *n,
            };
            if better {
                best = Some((data.len(), data));
            }
        }
        if let Some((_, data)) = best {
            return Ok(Some(data.into_iter().next().unwrap()));
        }
        for (i, c) in comps.iter().enumerate() {
            for d in &comps[i + 1..] {
                let data = oriented_mutual_data(self.surface, c.word(), d.word())?;
                if let Some(first) = data.into_iter().next() {
                    return Ok(Some(first));
                }
            }
        }
        Ok(None)
    }

    /// Expand a multiloop into the multicurve basis.
    pub fn expand(&self, m: &Multiloop) -> Result<SkeinElement> {
        if let Some(hit) = self.cache.borrow().get(m) {
            return Ok(hit.clone());
        }
        let result = match self.choose_datum(m)? {
            None => SkeinElement::basis(Multicurve::from_resolved(m.clone())),
            Some(datum) => {
                let (plus, minus) = smooth_unchecked(m, &datum)?;
                let parent = self.total(m);
                for half in [&plus, &minus] {
                    if self.total(&half.loops) >= parent {
                        return Err(Error::InvariantViolation(format!(
                            "smoothing failed to decrease total intersection on {:?}",
                            m
                        )));
                    }
                }
                let plus_part = self
                    .expand(&plus.loops)?
                    .scaled(&two_pow(plus.trivial));
                let minus_part = self
                    .expand(&minus.loops)?
                    .scaled(&two_pow(minus.trivial));
                match datum.kind {
                    intersect::DatumKind::Mutual => plus_part.plus(&minus_part),
                    intersect::DatumKind::SelfPoint => plus_part.minus(&minus_part),
                }
            }
        };
        self.cache
            .borrow_mut()
            .insert(m.clone(), result.clone());
        Ok(result)
    }

    /// Expand a single class.
    pub fn expand_class(&self, c: &ConjClass) -> Result<SkeinElement> {
        self.expand(&Multiloop::new(vec![c.clone()]))
    }

    /// Expansion resolving a uniformly random datum at each step; used to
    /// test confluence. No memoization, so keep inputs small.
    pub fn expand_randomized<R: Rng>(&self, m: &Multiloop, rng: &mut R) -> Result<SkeinElement> {
        let comps = m.components();
        let mut all: Vec<IntersectionDatum> = Vec::new();
        for c in comps {
            all.extend(intersect::oriented_self_data(self.surface, c.word())?);
        }
        for (i, c) in comps.iter().enumerate() {
            for d in &comps[i + 1..] {
                all.extend(oriented_mutual_data(self.surface, c.word(), d.word())?);
            }
        }
        if all.is_empty() {
            return Ok(SkeinElement::basis(Multicurve::from_resolved(m.clone())));
        }
        let datum = all.swap_remove(rng.gen_range(0..all.len()));
        let (plus, minus) = smooth_unchecked(m, &datum)?;
        let plus_part = self
            .expand_randomized(&plus.loops, rng)?
            .scaled(&two_pow(plus.trivial));
        let minus_part = self
            .expand_randomized(&minus.loops, rng)?
            .scaled(&two_pow(minus.trivial));
        Ok(match datum.kind {
            intersect::DatumKind::Mutual => plus_part.plus(&minus_part),
            intersect::DatumKind::SelfPoint => plus_part.minus(&minus_part),
        })
    }

    /// Product of two elements: bilinear extension of expanding the
    /// disjoint union. Associative and commutative with unit t_∅.
    pub fn product(&self, f: &SkeinElement, g: &SkeinElement) -> Result<SkeinElement> {
        let mut out = SkeinElement::zero();
        for (mu, a) in f.terms() {
            for (nu, b) in g.terms() {
                let expanded = self.expand(&mu.union(nu))?;
                out.add_scaled(&expanded, &(a * b));
            }
        }
        Ok(out)
    }

    /// Goldman bracket of two single classes from explicit oriented
    /// cyclically reduced representatives.
    pub fn bracket_oriented_words(&self, a: &Word, b: &Word) -> Result<SkeinElement> {
        let mut out = SkeinElement::zero();
        for d in oriented_mutual_data(self.surface, a, b)? {
            let sign = BigInt::from(d.sign as i32);
            let joined = d.left_factor.concat(&d.right_factor);
            let crossed = d.left_factor.concat(&d.right_factor.inverse());
            let plus = self.expand_joined(&joined)?;
            let minus = self.expand_joined(&crossed)?;
            out.add_scaled(&plus, &sign);
            out.add_scaled(&minus, &(-sign));
        }
        Ok(out)
    }

    fn expand_joined(&self, w: &Word) -> Result<SkeinElement> {
        match crate::surface::canonical_class(w) {
            crate::surface::Classified::Trivial => {
                Ok(SkeinElement::unit().scaled(&BigInt::from(2)))
            }
            crate::surface::Classified::Class(c) => self.expand_class(&c),
        }
    }

    fn bracket_single(&self, a: &ConjClass, b: &ConjClass) -> Result<SkeinElement> {
        if a == b {
            return Ok(SkeinElement::zero());
        }
        self.bracket_oriented_words(a.word(), b.word())
    }

    /// Goldman bracket on basis elements via the Leibniz rule over
    /// component pairs.
    pub fn bracket_basis(&self, mu: &Multicurve, nu: &Multicurve) -> Result<SkeinElement> {
        let mut out = SkeinElement::zero();
        for (i, c) in mu.components().iter().enumerate() {
            for (j, d) in nu.components().iter().enumerate() {
                let single = self.bracket_single(c, d)?;
                if single.is_zero() {
                    continue;
                }
                let rest = mu.without_one(i).union(&nu.without_one(j));
                let rest_el = self.expand(&rest)?;
                let term = self.product(&rest_el, &single)?;
                out.add_scaled(&term, &BigInt::one());
            }
        }
        Ok(out)
    }

    /// Goldman bracket, bilinear in both arguments.
    pub fn goldman_bracket(&self, f: &SkeinElement, g: &SkeinElement) -> Result<SkeinElement> {
        let mut out = SkeinElement::zero();
        for (mu, a) in f.terms() {
            for (nu, b) in g.terms() {
                let br = self.bracket_basis(mu, nu)?;
                out.add_scaled(&br, &(a * b));
            }
        }
        Ok(out)
    }
}

// ---------------------------------------------------------------------------
// Trace evaluation.

/// Scalars a representation can take values in.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_bigint(n: &BigInt) -> Self;
}

impl Scalar for BigInt {
    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

/// 2×2 matrix over a scalar ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T: Scalar> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Mat2<T> {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Mat2<T> {
        Mat2::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn mul(&self, o: &Mat2<T>) -> Mat2<T> {
        Mat2::new(
            self.a.clone() * o.a.clone() + self.b.clone() * o.c.clone(),
            self.a.clone() * o.b.clone() + self.b.clone() * o.d.clone(),
            self.c.clone() * o.a.clone() + self.d.clone() * o.c.clone(),
            self.c.clone() * o.b.clone() + self.d.clone() * o.d.clone(),
        )
    }

    pub fn det(&self) -> T {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> T {
        self.a.clone() + self.d.clone()
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv_det1(&self) -> Mat2<T> {
        Mat2::new(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }
}

/// Image of a word under a representation given on the generators.
pub fn rep_word<T: Scalar>(rep: &[Mat2<T>], w: &Word) -> Mat2<T> {
    let mut m = Mat2::identity();
    for &l in &w.0 {
        let g = &rep[crate::surface::gen_index(l)];
        let factor = if crate::surface::is_inverse(l) {
            g.inv_det1()
        } else {
            g.clone()
        };
        m = m.mul(&factor);
    }
    m
}

/// Validate that every generator image has determinant one.
pub fn check_rep<T: Scalar>(rep: &[Mat2<T>]) -> Result<()> {
    for (i, m) in rep.iter().enumerate() {
        if m.det() != T::one() {
            return Err(Error::Representation(format!(
                "generator {} image has determinant ≠ 1",
                i
            )));
        }
    }
    Ok(())
}

/// Evaluate an element at a representation: Σ m_μ Π tr(ρ(component)); the
/// empty multicurve evaluates to 1.
pub fn evaluate<T: Scalar>(f: &SkeinElement, rep: &[Mat2<T>]) -> Result<T> {
    check_rep(rep)?;
    let mut acc = T::zero();
    for (mu, coeff) in f.terms() {
        let mut prod = T::one();
        for c in mu.components() {
            prod = prod * rep_word(rep, c.word()).trace();
        }
        acc = acc + T::from_bigint(coeff) * prod;
    }
    Ok(acc)
}

/// Trace of a single word under a representation.
pub fn trace_of_word<T: Scalar>(rep: &[Mat2<T>], w: &Word) -> T {
    rep_word(rep, w).trace()
}

// ---------------------------------------------------------------------------
// The modular field used for exact randomized trace checks.

/// Prime modulus 2³¹ − 1.
pub const MODULUS: u64 = 2_147_483_647;

/// Element of F_p for p = 2³¹ − 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModP(pub u64);

impl ModP {
    pub fn new(v: u64) -> ModP {
        ModP(v % MODULUS)
    }

    pub fn pow(self, mut e: u64) -> ModP {
        let mut base = self;
        let mut acc = ModP(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(self) -> ModP {
        self.pow(MODULUS - 2)
    }
}

impl Add for ModP {
    type Output = ModP;
    fn add(self, o: ModP) -> ModP {
        ModP((self.0 + o.0) % MODULUS)
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, o: ModP) -> ModP {
        ModP((self.0 + MODULUS - o.0) % MODULUS)
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, o: ModP) -> ModP {
        ModP(self.0 * o.0 % MODULUS)
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        ModP((MODULUS - self.0) % MODULUS)
    }
}

impl Zero for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for ModP {
    fn one() -> Self {
        ModP(1)
    }
}

impl Scalar for ModP {
    fn from_bigint(n: &BigInt) -> Self {
        let p = BigInt::from(MODULUS);
        let r = ((n % &p) + &p) % &p;
        let digits = r.to_u64_digits().1;
        ModP(digits.first().copied().unwrap_or(0))
    }
}

/// A uniformly random SL2(F_p) matrix.
pub fn random_sl2<R: Rng>(rng: &mut R) -> Mat2<ModP> {
    loop {
        let a = ModP::new(rng.gen_range(0..MODULUS));
        let b = ModP::new(rng.gen_range(0..MODULUS));
        let c = ModP::new(rng.gen_range(0..MODULUS));
        if a.0 != 0 {
            // d = (1 + bc) / a
            let d = (ModP(1) + b * c) * a.inverse();
            return Mat2::new(a, b, c, d);
        }
        let d = ModP::new(rng.gen_range(0..MODULUS));
        if b.0 != 0 {
            // c = (ad − 1) / b with a = 0: c = −1/b
            let c = -(b.inverse());
            return Mat2::new(a, b, c, d);
        }
    }
}

/// A random modular representation of the surface group.
pub fn random_rep<R: Rng>(rng: &mut R, rank: usize) -> Vec<Mat2<ModP>> {
    (0..rank).map(|_| random_sl2(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t1p() -> Surface {
        Surface::once_punctured_torus()
    }

    fn cl(s: &Surface, text: &str) -> ConjClass {
        class_of(&s.parse_word(text).unwrap()).unwrap()
    }

    fn mc(s: &Surface, words: &[&str]) -> Multicurve {
        Multicurve::new(s, words.iter().map(|w| cl(s, w)).collect()).unwrap()
    }

    #[test]
    fn expand_is_identity_on_multicurves() {
        let s = t1p();
        let e = Expander::new(&s);
        let mu = mc(&s, &["a", "a b a' b'"]);
        let f = e.expand(&mu.as_multiloop()).unwrap();
        assert_eq!(f, SkeinElement::basis(mu));
    }

    #[test]
    fn torus_intro_identity() {
        // t_a·t_b = t_{ab} + t_{ab⁻¹}
        let s = t1p();
        let e = Expander::new(&s);
        let m = Multiloop::new(vec![cl(&s, "a"), cl(&s, "b")]);
        let f = e.expand(&m).unwrap();
        let expect = SkeinElement::basis(mc(&s, &["a b"]))
            .plus(&SkeinElement::basis(mc(&s, &["a b'"])));
        assert_eq!(f, expect);
    }

    #[test]
    fn square_expansion() {
        // t_{a²} = t_a² − 2
        let s = t1p();
        let e = Expander::new(&s);
        let f = e.expand_class(&cl(&s, "a a")).unwrap();
        let expect = SkeinElement::basis(mc(&s, &["a", "a"]))
            .minus(&SkeinElement::unit().scaled(&BigInt::from(2)));
        assert_eq!(f, expect);
    }

    #[test]
    fn product_unit_and_disjoint() {
        let s = t1p();
        let e = Expander::new(&s);
        let f = e.expand_class(&cl(&s, "a b")).unwrap();
        assert_eq!(e.product(&f, &SkeinElement::unit()).unwrap(), f);
        let mu = mc(&s, &["a"]);
        let nu = mc(&s, &["a b a' b'"]);
        let prod = e
            .product(&SkeinElement::basis(mu.clone()), &SkeinElement::basis(nu.clone()))
            .unwrap();
        assert_eq!(
            prod,
            SkeinElement::basis(mc(&s, &["a", "a b a' b'"]))
        );
    }

    #[test]
    fn bracket_of_disjoint_classes_vanishes() {
        let s = t1p();
        let e = Expander::new(&s);
        let f = SkeinElement::basis(mc(&s, &["a"]));
        let g = SkeinElement::basis(mc(&s, &["a b a' b'"]));
        assert!(e.goldman_bracket(&f, &g).unwrap().is_zero());
    }

    #[test]
    fn torus_bracket_of_generators() {
        // {t_a, t_b} = ±(t_{ab} − t_{ab⁻¹}); the ε convention fixes +.
        let s = t1p();
        let e = Expander::new(&s);
        let f = SkeinElement::basis(mc(&s, &["a"]));
        let g = SkeinElement::basis(mc(&s, &["b"]));
        let br = e.goldman_bracket(&f, &g).unwrap();
        let plus = SkeinElement::basis(mc(&s, &["a b"]))
            .minus(&SkeinElement::basis(mc(&s, &["a b'"])));
        let minus = plus.scaled(&BigInt::from(-1));
        assert!(br == plus || br == minus);
        // Antisymmetry.
        let rev = e.goldman_bracket(&g, &f).unwrap();
        assert_eq!(br.plus(&rev), SkeinElement::zero());
    }

    #[test]
    fn evaluate_trace_identity_randomly() {
        let s = t1p();
        let e = Expander::new(&s);
        let m = Multiloop::new(vec![cl(&s, "a"), cl(&s, "b")]);
        let f = e.expand(&m).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let rep = random_rep(&mut rng, s.rank());
            let lhs = evaluate(&f, &rep).unwrap();
            let rhs = trace_of_word(&rep, &s.parse_word("a").unwrap())
                * trace_of_word(&rep, &s.parse_word("b").unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn evaluate_unit() {
        let s = t1p();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rep = random_rep(&mut rng, s.rank());
        assert_eq!(evaluate(&SkeinElement::unit(), &rep).unwrap(), ModP(1));
    }

    #[test]
    fn confluence_small() {
        let s = t1p();
        let e = Expander::new(&s);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = Multiloop::new(vec![cl(&s, "a a b"), cl(&s, "b")]);
        let reference = e.expand(&m).unwrap();
        for _ in 0..10 {
            assert_eq!(e.expand_randomized(&m, &mut rng).unwrap(), reference);
        }
    }

    #[test]
    fn pretty_rendering() {
        let s = t1p();
        let e = Expander::new(&s);
        let f = e.expand_class(&cl(&s, "a a")).unwrap();
        assert_eq!(f.pretty(&s), "-2 + t[a, a]");
    }
}
