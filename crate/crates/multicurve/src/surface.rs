//! Surface presentations with free fundamental group, word and cyclic-word
//! arithmetic, and canonical conjugacy-class representatives.
//!
//! A surface with punctures deformation-retracts onto a rose; the oriented
//! surface structure is recorded as a cyclic order (`fatgraph_order`) on
//! the 2·rank directed letters at the basepoint. Words are sequences over
//! the directed alphabet; a conjugacy class up to inversion is stored as the
//! lexicographically least cyclically reduced representative.

use crate::{Error, Result};
use std::fmt;

/// A directed letter: generator `g` is `2g`, its inverse is `2g + 1`.
///
/// The induced numeric order is `a < a⁻¹ < b < b⁻¹ < …`, which is the fixed
/// total order used for canonical forms.
pub type Letter = u8;

/// Inverse of a directed letter.
#[inline]
pub fn inv(l: Letter) -> Letter {
    l ^ 1
}

/// Generator index of a directed letter.
#[inline]
pub fn gen_index(l: Letter) -> usize {
    (l >> 1) as usize
}

/// True if the letter is the inverse of a generator.
#[inline]
pub fn is_inverse(l: Letter) -> bool {
    l & 1 == 1
}

/// A word in the free group on the surface generators. Not necessarily
/// reduced; reduction is an operation, not an invariant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| inv(l)).collect())
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `self^n` for any integer n (negative powers via the inverse).
    pub fn power(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(self.len() * n.unsigned_abs() as usize);
        for _ in 0..n.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        Word(v)
    }

    /// Rotation moving the first `i` letters to the end.
    pub fn rotate(&self, i: usize) -> Word {
        let n = self.len();
        if n == 0 {
            return Word::empty();
        }
        let i = i % n;
        let mut v = Vec::with_capacity(n);
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&self.0[..i]);
        Word(v)
    }

    /// Length of the shortest repeating block (the primitive root period).
    pub fn primitive_period(&self) -> usize {
        let n = self.len();
        'outer: for p in 1..=n {
            if n % p != 0 {
                continue;
            }
            for k in p..n {
                if self.0[k] != self.0[k - p] {
                    continue 'outer;
                }
            }
            return p;
        }
        n
    }
}

/// Free reduction: cancel adjacent `x x⁻¹` pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.0 {
        if stack.last() == Some(&inv(l)) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    Word(stack)
}

/// Cyclic reduction: free-reduce, then strip conjugating pairs from the ends.
pub fn cyclic_reduce(w: &Word) -> Word {
    let mut v = free_reduce(w).0;
    while v.len() >= 2 && *v.first().unwrap() == inv(*v.last().unwrap()) {
        v.pop();
        v.remove(0);
    }
    Word(v)
}

/// True iff the word represents the identity.
pub fn is_trivial(w: &Word) -> bool {
    free_reduce(w).is_empty()
}

/// A free-homotopy class of an unoriented loop: the canonical cyclically
/// reduced word, lexicographically least among all rotations of itself and
/// of its inverse. Always nontrivial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConjClass {
    canonical: Word,
}

impl ConjClass {
    pub fn word(&self) -> &Word {
        &self.canonical
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The class of the inverse loop (equal to `self`: classes are taken up
    /// to inversion). Kept for symmetry in call sites.
    pub fn inverse_class(&self) -> ConjClass {
        self.clone()
    }

    /// Smallest k with `self = root^k`; k = 1 for primitive classes.
    pub fn power_exponent(&self) -> usize {
        self.canonical.len() / self.canonical.primitive_period()
    }

    /// Primitive root word (first period of the canonical representative).
    pub fn primitive_root(&self) -> Word {
        let p = self.canonical.primitive_period();
        Word(self.canonical.0[..p].to_vec())
    }
}

/// Result of canonicalizing a word: either the distinguished trivial marker
/// or a genuine class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classified {
    Trivial,
    Class(ConjClass),
}

impl Classified {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Classified::Trivial)
    }

    pub fn class(self) -> Option<ConjClass> {
        match self {
            Classified::Trivial => None,
            Classified::Class(c) => Some(c),
        }
    }
}

/// Canonical representative of the conjugacy-and-inversion orbit of `w`.
pub fn canonical_class(w: &Word) -> Classified {
    let r = cyclic_reduce(w);
    if r.is_empty() {
        return Classified::Trivial;
    }
    let mut best: Option<Word> = None;
    for cand in [&r, &r.inverse()] {
        for i in 0..cand.len() {
            let rot = cand.rotate(i);
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    Classified::Class(ConjClass {
        canonical: best.unwrap(),
    })
}

/// Canonicalize a word known to be nontrivial.
pub fn class_of(w: &Word) -> Result<ConjClass> {
    canonical_class(w).class().ok_or(Error::TrivialClass {
        context: "class_of".into(),
    })
}

/// A multiset of nontrivial free-homotopy classes, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Multiloop {
    components: Vec<ConjClass>,
}

impl Multiloop {
    pub fn new(mut components: Vec<ConjClass>) -> Self {
        components.sort();
        Multiloop { components }
    }

    pub fn empty() -> Self {
        Multiloop {
            components: Vec::new(),
        }
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

    pub fn push(&mut self, c: ConjClass) {
        let pos = self.components.partition_point(|x| *x <= c);
        self.components.insert(pos, c);
    }

    /// Remove one copy of `c`; errors if absent.
    pub fn remove_one(&mut self, c: &ConjClass) -> Result<()> {
        match self.components.iter().position(|x| x == c) {
            Some(i) => {
                self.components.remove(i);
                Ok(())
            }
            None => Err(Error::StaleDatum(format!(
                "component {:?} absent from multiloop",
                c.word()
            ))),
        }
    }

    pub fn union(&self, other: &Multiloop) -> Multiloop {
        let mut v = self.components.clone();
        v.extend_from_slice(&other.components);
        Multiloop::new(v)
    }
}

/// A surface with punctures: free fundamental group of the stated rank plus
/// the fat-graph cyclic order encoding the oriented surface at the basepoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surface {
    pub genus: u32,
    pub punctures: u32,
    names: Vec<String>,
    fatgraph_order: Vec<Letter>,
    position: Vec<u8>,
    boundary: Vec<ConjClass>,
}

impl Surface {
    /// Build and validate a surface presentation.
    ///
    /// `fatgraph_order` lists all `2·rank` directed letters in their cyclic
    /// order at the basepoint. The Euler-characteristic check on the fat
    /// graph must reproduce the declared genus and puncture count.
    pub fn new(
        genus: u32,
        punctures: u32,
        names: Vec<String>,
        fatgraph_order: Vec<Letter>,
    ) -> Result<Surface> {
        let rank = names.len();
        if punctures == 0 {
            return Err(Error::BadSurface("surface must have punctures".into()));
        }
        if rank as u32 != 2 * genus + punctures - 1 {
            return Err(Error::BadSurface(format!(
                "rank {} does not match 2·{} + {} − 1",
                rank, genus, punctures
            )));
        }
        if rank < 2 {
            return Err(Error::BadSurface("rank must be at least 2".into()));
        }
        if rank > 100 {
            return Err(Error::BadSurface("rank too large".into()));
        }
        let deg = 2 * rank;
        if fatgraph_order.len() != deg {
            return Err(Error::BadSurface(format!(
                "fat-graph order must list all {} directed letters",
                deg
            )));
        }
        let mut seen = vec![false; deg];
        for &l in &fatgraph_order {
            if (l as usize) >= deg || seen[l as usize] {
                return Err(Error::BadSurface(
                    "fat-graph order is not a permutation of the directed letters".into(),
                ));
            }
            seen[l as usize] = true;
        }
        let mut position = vec![0u8; deg];
        for (i, &l) in fatgraph_order.iter().enumerate() {
            position[l as usize] = i as u8;
        }

        // Boundary cycles of the ribbon graph: orbits of x ↦ σ(x⁻¹).
        let mut visited = vec![false; deg];
        let mut boundary_words: Vec<Word> = Vec::new();
        for start in 0..deg as u8 {
            if visited[start as usize] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            loop {
                visited[x as usize] = true;
                orbit.push(x);
                let p = position[inv(x) as usize] as usize;
                x = fatgraph_order[(p + 1) % deg];
                if x == start {
                    break;
                }
            }
            boundary_words.push(Word(orbit));
        }
        let b = boundary_words.len() as u32;
        if b != punctures {
            return Err(Error::BadSurface(format!(
                "fat graph has {} boundary components, expected {}",
                b, punctures
            )));
        }
        // χ = 1 − rank must equal 2 − 2g − b.
        if 1i64 - rank as i64 != 2 - 2 * genus as i64 - b as i64 {
            return Err(Error::BadSurface(
                "fat graph genus does not match declaration".into(),
            ));
        }
        let mut boundary = Vec::new();
        for w in &boundary_words {
            match canonical_class(w) {
                Classified::Class(c) => boundary.push(c),
                Classified::Trivial => {
                    return Err(Error::BadSurface("trivial boundary word".into()))
                }
            }
        }
        boundary.sort();
        Ok(Surface {
            genus,
            punctures,
            names,
            fatgraph_order,
            position,
            boundary,
        })
    }

    /// Once-punctured torus ⟨a, b⟩ with fat-graph order (a, b, a⁻¹, b⁻¹).
    pub fn once_punctured_torus() -> Surface {
        Surface::new(
            1,
            1,
            vec!["a".into(), "b".into()],
            vec![0, 2, 1, 3],
        )
        .expect("preset")
    }

    /// Four-punctured sphere ⟨x₁, x₂, x₃⟩ with x₄ = (x₁x₂x₃)⁻¹ and fat-graph
    /// order (x₁, x₁⁻¹, x₂, x₂⁻¹, x₃, x₃⁻¹).
    pub fn four_punctured_sphere() -> Surface {
        Surface::new(
            0,
            4,
            vec!["x1".into(), "x2".into(), "x3".into()],
            vec![0, 1, 2, 3, 4, 5],
        )
        .expect("preset")
    }

    /// Look up a preset by its CLI name.
    pub fn preset(name: &str) -> Option<Surface> {
        match name {
            "t1p" => Some(Surface::once_punctured_torus()),
            "s4p" => Some(Surface::four_punctured_sphere()),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn alphabet_len(&self) -> usize {
        2 * self.rank()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn fatgraph_order(&self) -> &[Letter] {
        &self.fatgraph_order
    }

    /// Position of a directed letter in the fat-graph cyclic order.
    #[inline]
    pub fn order_position(&self, l: Letter) -> u8 {
        self.position[l as usize]
    }

    /// Boundary classes traced from the fat graph, sorted.
    pub fn boundary_classes(&self) -> &[ConjClass] {
        &self.boundary
    }

    /// Orientation of three distinct directed letters in the cyclic order:
    /// +1 if walking forward from `x` meets `y` before `z`.
    pub fn cyclic_orientation(&self, x: Letter, y: Letter, z: Letter) -> i8 {
        debug_assert!(x != y && y != z && x != z);
        let n = self.alphabet_len() as i16;
        let px = self.position[x as usize] as i16;
        let dy = (self.position[y as usize] as i16 - px).rem_euclid(n);
        let dz = (self.position[z as usize] as i16 - px).rem_euclid(n);
        if dy < dz {
            1
        } else {
            -1
        }
    }

    fn letter_of_token(&self, token: &str, position: usize) -> Result<Letter> {
        let err = || Error::UnknownLetter {
            token: token.to_string(),
            position,
        };
        if let Some(base) = token.strip_suffix('\'') {
            let g = self.names.iter().position(|n| n == base).ok_or_else(err)?;
            return Ok(2 * g as Letter + 1);
        }
        if let Some(g) = self.names.iter().position(|n| n == token) {
            return Ok(2 * g as Letter);
        }
        let lower = token.to_lowercase();
        if lower != token {
            if let Some(g) = self.names.iter().position(|n| *n == lower) {
                return Ok(2 * g as Letter + 1);
            }
        }
        Err(err())
    }

    /// Parse a word from whitespace-separated tokens. Inverses are marked by
    /// a trailing apostrophe or by uppercase: `a b A b` = `a·b·a⁻¹·b`.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        let mut letters = Vec::new();
        for (i, token) in s.split_whitespace().enumerate() {
            letters.push(self.letter_of_token(token, i)?);
        }
        Ok(Word(letters))
    }

    /// Render a word with apostrophe-marked inverses.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.0.iter()
            .map(|&l| {
                let name = &self.names[gen_index(l)];
                if is_inverse(l) {
                    format!("{}'", name)
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn format_class(&self, c: &ConjClass) -> String {
        self.format_word(c.word())
    }

    /// Parse a surface from the declarative text format:
    ///
    /// ```text
    /// genus 0
    /// punctures 4
    /// generators x1 x2 x3
    /// order x1 x1' x2 x2' x3 x3'
    /// boundary x1
    /// ```
    ///
    /// `boundary` lines are optional; when present, each declared word must
    /// match one traced boundary class.
    pub fn parse(text: &str) -> Result<Surface> {
        let mut genus: Option<u32> = None;
        let mut punctures: Option<u32> = None;
        let mut names: Option<Vec<String>> = None;
        let mut order_tokens: Option<(usize, Vec<String>)> = None;
        let mut boundary_lines: Vec<(usize, String)> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let key = parts.next().unwrap();
            let rest: Vec<String> = parts.map(|s| s.to_string()).collect();
            let parse_u32 = |v: &[String]| -> Result<u32> {
                if v.len() != 1 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected a single integer".into(),
                    });
                }
                v[0].parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("bad integer `{}`", v[0]),
                })
            };
            match key {
                "genus" => genus = Some(parse_u32(&rest)?),
                "punctures" => punctures = Some(parse_u32(&rest)?),
                "generators" => {
                    if rest.is_empty() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "no generators listed".into(),
                        });
                    }
                    for n in &rest {
                        let ok = !n.is_empty()
                            && n.chars().next().unwrap().is_ascii_lowercase()
                            && n.chars().all(|c| c.is_ascii_alphanumeric());
                        if !ok {
                            return Err(Error::Parse {
                                line: line_no,
                                message: format!(
                                    "generator `{}` must be lowercase alphanumeric",
                                    n
                                ),
                            });
                        }
                    }
                    let mut sorted = rest.clone();
                    sorted.sort();
                    sorted.dedup();
                    if sorted.len() != rest.len() {
                        return Err(Error::Parse {
                            line: line_no,
                            message: "duplicate generator".into(),
                        });
                    }
                    names = Some(rest);
                }
                "order" => order_tokens = Some((line_no, rest)),
                "boundary" => boundary_lines.push((line_no, rest.join(" "))),
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("unknown key `{}`", key),
                    })
                }
            }
        }

        let missing = |what: &str| Error::Parse {
            line: 0,
            message: format!("missing `{}` line", what),
        };
        let genus = genus.ok_or_else(|| missing("genus"))?;
        let punctures = punctures.ok_or_else(|| missing("punctures"))?;
        let names = names.ok_or_else(|| missing("generators"))?;
        let (order_line, order_tokens) = order_tokens.ok_or_else(|| missing("order"))?;

        // A temporary surface-shaped parser for the order tokens.
        let proto = Surface {
            genus,
            punctures,
            names: names.clone(),
            fatgraph_order: Vec::new(),
            position: Vec::new(),
            boundary: Vec::new(),
        };
        let mut order = Vec::new();
        for (i, t) in order_tokens.iter().enumerate() {
            order.push(
                proto
                    .letter_of_token(t, i)
                    .map_err(|_| Error::Parse {
                        line: order_line,
                        message: format!("unknown letter `{}` in order", t),
                    })?,
            );
        }
        let surface = Surface::new(genus, punctures, names, order)?;
        for (line_no, text) in boundary_lines {
            let w = surface.parse_word(&text).map_err(|e| Error::Parse {
                line: line_no,
                message: e.to_string(),
            })?;
            match canonical_class(&w) {
                Classified::Class(c) if surface.boundary.contains(&c) => {}
                _ => {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!(
                            "declared boundary `{}` is not a boundary class of the fat graph",
                            text
                        ),
                    })
                }
            }
        }
        Ok(surface)
    }

    /// Validate that every letter of a word belongs to this alphabet.
    pub fn check_word(&self, w: &Word) -> Result<()> {
        for (i, &l) in w.0.iter().enumerate() {
            if (l as usize) >= self.alphabet_len() {
                return Err(Error::UnknownLetter {
                    token: format!("#{}", l),
                    position: i,
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "genus {} with {} punctures, generators {}",
            self.genus,
            self.punctures,
            self.names.join(" ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t1p() -> Surface {
        Surface::once_punctured_torus()
    }

    fn w(surface: &Surface, s: &str) -> Word {
        surface.parse_word(s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        let s = t1p();
        assert_eq!(free_reduce(&w(&s, "a a' b")), w(&s, "b"));
        assert_eq!(free_reduce(&Word::empty()), Word::empty());
        assert_eq!(free_reduce(&w(&s, "a b b' a")), w(&s, "a a"));
    }

    #[test]
    fn cyclic_reduce_examples() {
        let s = t1p();
        assert_eq!(cyclic_reduce(&w(&s, "a b a'")), w(&s, "b"));
        assert_eq!(cyclic_reduce(&w(&s, "a b")), w(&s, "a b"));
        assert_eq!(cyclic_reduce(&w(&s, "b' a b")), w(&s, "a"));
    }

    #[test]
    fn canonical_class_examples() {
        let s = t1p();
        let ab = class_of(&w(&s, "a b")).unwrap();
        assert_eq!(class_of(&w(&s, "b a")).unwrap(), ab);
        assert_eq!(class_of(&w(&s, "b' a'")).unwrap(), ab);
        // A genuine conjugate: (ab)·(ab)·(ab)⁻¹ shuffled through g = aba⁻¹.
        assert_eq!(class_of(&w(&s, "a b b a b' a'")).unwrap(), ab);
        // w = (aba⁻¹)·b·(aba⁻¹)⁻¹ is a conjugate of b.
        assert_eq!(
            class_of(&w(&s, "a b a' b a b' a'")).unwrap(),
            class_of(&w(&s, "b")).unwrap()
        );
    }

    #[test]
    fn triviality() {
        let s = t1p();
        assert!(is_trivial(&w(&s, "a a'")));
        assert!(!is_trivial(&w(&s, "a")));
        assert!(!is_trivial(&w(&s, "a b a' b'")));
        assert!(canonical_class(&w(&s, "a a'")).is_trivial());
    }

    #[test]
    fn presets_pass_euler_check() {
        let t = Surface::once_punctured_torus();
        assert_eq!((t.genus, t.punctures), (1, 1));
        let commutator = class_of(&t.parse_word("a b a' b'").unwrap()).unwrap();
        assert_eq!(t.boundary_classes(), &[commutator]);

        let s = Surface::four_punctured_sphere();
        assert_eq!((s.genus, s.punctures), (0, 4));
        let mut expected: Vec<ConjClass> = ["x1", "x2", "x3", "x1 x2 x3"]
            .iter()
            .map(|t| class_of(&s.parse_word(t).unwrap()).unwrap())
            .collect();
        expected.sort();
        assert_eq!(s.boundary_classes(), expected.as_slice());
    }

    #[test]
    fn corrupted_order_rejected() {
        // (a, b, b⁻¹, a⁻¹) is a planar rose: one extra boundary component.
        let err = Surface::new(1, 1, vec!["a".into(), "b".into()], vec![0, 2, 3, 1]);
        assert!(err.is_err());
    }

    #[test]
    fn parse_inverse_tokens() {
        let s = Surface::four_punctured_sphere();
        let a = s.parse_word("x1 X2 x3'").unwrap();
        assert_eq!(a, Word(vec![0, 3, 5]));
        assert!(s.parse_word("x4").is_err());
        assert_eq!(s.format_word(&a), "x1 x2' x3'");
    }

    #[test]
    fn parse_surface_file() {
        let text = "\n# four-punctured sphere\ngenus 0\npunctures 4\ngenerators x1 x2 x3\norder x1 x1' x2 x2' x3 x3'\nboundary x1\nboundary x1 x2 x3\n";
        let s = Surface::parse(text).unwrap();
        assert_eq!(s, Surface::four_punctured_sphere());
        let bad = "genus 0\npunctures 4\ngenerators x1 x2 x3\norder x1 x1' x2 x2' x3 x3'\nboundary x1 x2\n";
        assert!(Surface::parse(bad).is_err());
    }

    #[test]
    fn power_structure() {
        let s = t1p();
        let a2 = class_of(&w(&s, "a a")).unwrap();
        assert_eq!(a2.power_exponent(), 2);
        assert_eq!(a2.primitive_root(), w(&s, "a"));
        let ab = class_of(&w(&s, "a b")).unwrap();
        assert_eq!(ab.power_exponent(), 1);
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0u8..4, 0..max_len).prop_map(Word)
    }

    proptest! {
        #[test]
        fn reduction_idempotent_and_nonincreasing(word in arb_word(24)) {
            let r = free_reduce(&word);
            prop_assert!(r.len() <= word.len());
            prop_assert_eq!(free_reduce(&r).clone(), r.clone());
            let c = cyclic_reduce(&word);
            prop_assert!(c.len() <= r.len());
            prop_assert_eq!(cyclic_reduce(&c).clone(), c.clone());
        }

        #[test]
        fn canonical_invariant_under_conjugation_and_inversion(
            word in arb_word(14),
            conj in arb_word(8),
        ) {
            let base = canonical_class(&word);
            let conjugated = conj.concat(&word).concat(&conj.inverse());
            prop_assert_eq!(canonical_class(&conjugated), base.clone());
            prop_assert_eq!(canonical_class(&word.inverse()), base);
        }

        #[test]
        fn canonical_is_fixed_point(word in arb_word(14)) {
            if let Classified::Class(c) = canonical_class(&word) {
                let again = canonical_class(c.word());
                prop_assert_eq!(again, Classified::Class(c));
            }
        }
    }
}
