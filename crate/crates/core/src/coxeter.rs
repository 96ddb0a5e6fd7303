//! Finite Coxeter groups of types A and B realized as (signed) permutations.
//!
//! Type A elements of `S_n` are written in string notation `x_1 x_2 ... x_n`
//! with the digit alphabet extended by `a = 10`, `b = 11`, ... up to `z = 35`.
//! Type B elements of the hyperoctahedral group `B_n` are signed strings; a
//! negative image is written with a leading `-`, e.g. `-21`.
//!
//! Generators are indexed from 1 in type A (`s_i` swaps `i` and `i+1`).
//! Type B adds the special generator `s_0`, the sign change of `1`.
//! Products compose as maps: `(a * b)(i) = a(b(i))`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

mod group;
pub use group::{EnumeratedGroup, MAX_ENUMERATED_ORDER};

pub const MAX_DEGREE: usize = 35;

pub type Generator = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// A Coxeter system of type `A_{n-1}` (acting on strings of length `n`) or
/// `B_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterSystem {
    family: Family,
    degree: usize,
}

impl CoxeterSystem {
    /// The symmetric group `S_n`, of rank `n - 1`.
    pub fn type_a(n: usize) -> Result<Self> {
        if !(2..=MAX_DEGREE).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        Ok(Self { family: Family::A, degree: n })
    }

    /// The hyperoctahedral group `B_n`, of rank `n`.
    pub fn type_b(n: usize) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&n) {
            return Err(Error::UnsupportedDegree(n));
        }
        Ok(Self { family: Family::B, degree: n })
    }

    pub fn new(family: Family, n: usize) -> Result<Self> {
        match family {
            Family::A => Self::type_a(n),
            Family::B => Self::type_b(n),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Length of the (signed) strings representing elements.
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A => self.degree - 1,
            Family::B => self.degree,
        }
    }

    pub fn generators(&self) -> Vec<Generator> {
        match self.family {
            Family::A => (1..self.degree).collect(),
            Family::B => (0..self.degree).collect(),
        }
    }

    pub fn is_generator(&self, s: Generator) -> bool {
        match self.family {
            Family::A => (1..self.degree).contains(&s),
            Family::B => s < self.degree,
        }
    }

    fn check_generator(&self, s: Generator) -> Result<()> {
        if self.is_generator(s) {
            Ok(())
        } else {
            Err(Error::GeneratorOutOfRange { generator: s, system: self.to_string() })
        }
    }

    /// Order of the Coxeter element `st` for generators `s != t`.
    pub fn braid_order(&self, s: Generator, t: Generator) -> u32 {
        let (lo, hi) = if s < t { (s, t) } else { (t, s) };
        if hi - lo > 1 {
            2
        } else if self.family == Family::B && lo == 0 {
            4
        } else {
            3
        }
    }

    pub fn order(&self) -> u128 {
        let fact: u128 = (1..=self.degree as u128).product();
        match self.family {
            Family::A => fact,
            Family::B => fact << self.degree,
        }
    }

    pub fn identity(&self) -> CoxeterElement {
        CoxeterElement {
            family: self.family,
            images: (1..=self.degree as i8).collect(),
        }
    }

    pub fn longest_element(&self) -> CoxeterElement {
        let images = match self.family {
            Family::A => (1..=self.degree as i8).rev().collect(),
            Family::B => (1..=self.degree as i8).map(|i| -i).collect(),
        };
        CoxeterElement { family: self.family, images }
    }

    pub fn generator(&self, s: Generator) -> Result<CoxeterElement> {
        self.check_generator(s)?;
        Ok(self.identity().right_mul_gen(s))
    }

    /// Parses an element in (signed) string notation.
    pub fn parse(&self, s: &str) -> Result<CoxeterElement> {
        let bad = || Error::InvalidPermutation(s.to_string());
        let mut images = Vec::with_capacity(self.degree);
        let mut negate = false;
        for ch in s.chars() {
            if ch == '-' && self.family == Family::B && !negate {
                negate = true;
                continue;
            }
            let v = digit_value(ch).filter(|&v| v >= 1).ok_or_else(bad)? as i8;
            images.push(if negate { -v } else { v });
            negate = false;
        }
        if negate || images.len() != self.degree {
            return Err(bad());
        }
        let mut seen = vec![false; self.degree + 1];
        for &v in &images {
            let a = v.unsigned_abs() as usize;
            if a > self.degree || seen[a] {
                return Err(bad());
            }
            seen[a] = true;
        }
        Ok(CoxeterElement { family: self.family, images })
    }

    /// Product of simple reflections, taken left to right.
    pub fn word_to_elt(&self, word: &[Generator]) -> Result<CoxeterElement> {
        let mut w = self.identity();
        for &s in word {
            self.check_generator(s)?;
            w = w.right_mul_gen(s);
        }
        Ok(w)
    }

    /// Longest element of the standard parabolic subgroup generated by
    /// `gens`.
    pub fn longest_parabolic_elt(&self, gens: &[Generator]) -> Result<CoxeterElement> {
        for &s in gens {
            self.check_generator(s)?;
        }
        let mut w = self.identity();
        'grow: loop {
            for &s in gens {
                if !w.is_descent(s, Side::Right) {
                    w = w.right_mul_gen(s);
                    continue 'grow;
                }
            }
            return Ok(w);
        }
    }

    /// All elements, in no particular order. Only sensible for small groups.
    pub fn elements(&self) -> Vec<CoxeterElement> {
        let n = self.degree;
        let mut out = Vec::new();
        let mut perm: Vec<i8> = (1..=n as i8).collect();
        permutations(&mut perm, 0, &mut |p| match self.family {
            Family::A => out.push(CoxeterElement { family: Family::A, images: p.to_vec() }),
            Family::B => {
                for mask in 0u64..(1u64 << n) {
                    let images = p
                        .iter()
                        .enumerate()
                        .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                        .collect();
                    out.push(CoxeterElement { family: Family::B, images });
                }
            }
        });
        out
    }
}

fn permutations(p: &mut [i8], k: usize, f: &mut impl FnMut(&[i8])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, f);
        p.swap(k, i);
    }
}

impl fmt::Display for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "S_{}", self.degree),
            Family::B => write!(f, "B_{}", self.degree),
        }
    }
}

/// Value of a string-notation digit (`1`-`9`, then `a` = 10 ... `z` = 35).
/// `0` maps to 0, which is only meaningful for generator words.
pub fn digit_value(ch: char) -> Option<usize> {
    ch.to_digit(36).map(|d| d as usize)
}

pub fn digit_char(v: usize) -> char {
    char::from_digit(v as u32, 36).unwrap_or('?')
}

/// Parses a type A permutation in string notation.
pub fn parse_perm(s: &str, n: usize) -> Result<CoxeterElement> {
    CoxeterSystem::type_a(n)?.parse(s)
}

/// Parses a word of generator indices, either comma/space separated
/// (`"11,5,6"`) or compact with one digit per letter (`"b56"`).
pub fn parse_word(s: &str) -> Result<Vec<Generator>> {
    let bad = || Error::InvalidWord(s.to_string());
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    if s.contains([',', ' ']) {
        s.split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    } else {
        s.chars().map(|c| digit_value(c).ok_or_else(bad)).collect()
    }
}

pub fn format_word(word: &[Generator]) -> String {
    word.iter().map(|&s| digit_char(s)).collect()
}

/// A group element stored as its (signed) image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoxeterElement {
    family: Family,
    images: Vec<i8>,
}

impl CoxeterElement {
    pub fn system(&self) -> CoxeterSystem {
        CoxeterSystem { family: self.family, degree: self.images.len() }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image list `w(1), ..., w(n)`.
    pub fn images(&self) -> &[i8] {
        &self.images
    }

    /// `w(i)` for `1 <= |i| <= n`.
    pub fn apply(&self, i: i32) -> i32 {
        let v = self.images[i.unsigned_abs() as usize - 1] as i32;
        if i < 0 {
            -v
        } else {
            v
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Coxeter length: inversions in type A, `inv + neg + nsp` in type B.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let n = w.len();
        let mut len = 0;
        for i in 0..n {
            for j in i + 1..n {
                if w[i] > w[j] {
                    len += 1;
                }
                if self.family == Family::B && w[i] + w[j] < 0 {
                    len += 1;
                }
            }
            if self.family == Family::B && w[i] < 0 {
                len += 1;
            }
        }
        len
    }

    pub fn inverse(&self) -> CoxeterElement {
        let mut images = vec![0i8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            let pos = (i + 1) as i8;
            images[v.unsigned_abs() as usize - 1] = if v < 0 { -pos } else { pos };
        }
        CoxeterElement { family: self.family, images }
    }

    pub fn mul(&self, other: &CoxeterElement) -> Result<CoxeterElement> {
        if self.system() != other.system() {
            return Err(Error::SystemMismatch);
        }
        let images = other.images.iter().map(|&b| self.apply(b as i32) as i8).collect();
        Ok(CoxeterElement { family: self.family, images })
    }

    /// `w * s`: acts on positions.
    pub fn right_mul_gen(&self, s: Generator) -> CoxeterElement {
        let mut images = self.images.clone();
        if s == 0 {
            images[0] = -images[0];
        } else {
            images.swap(s - 1, s);
        }
        CoxeterElement { family: self.family, images }
    }

    /// `s * w`: acts on values.
    pub fn left_mul_gen(&self, s: Generator) -> CoxeterElement {
        let images = self
            .images
            .iter()
            .map(|&v| {
                let a = v.unsigned_abs() as usize;
                let sign: i8 = if v < 0 { -1 } else { 1 };
                if s == 0 {
                    if a == 1 {
                        -v
                    } else {
                        v
                    }
                } else if a == s {
                    sign * (s as i8 + 1)
                } else if a == s + 1 {
                    sign * s as i8
                } else {
                    v
                }
            })
            .collect();
        CoxeterElement { family: self.family, images }
    }

    pub fn mul_gen(&self, s: Generator, side: Side) -> CoxeterElement {
        match side {
            Side::Left => self.left_mul_gen(s),
            Side::Right => self.right_mul_gen(s),
        }
    }

    fn position_of(&self, value: i8) -> (usize, bool) {
        for (i, &v) in self.images.iter().enumerate() {
            if v == value {
                return (i, false);
            }
            if v == -value {
                return (i, true);
            }
        }
        unreachable!("value {value} missing from a permutation")
    }

    /// Whether `s` lowers the length when multiplied on `side`.
    pub fn is_descent(&self, s: Generator, side: Side) -> bool {
        match side {
            Side::Right => {
                if s == 0 {
                    self.images[0] < 0
                } else {
                    self.images[s - 1] > self.images[s]
                }
            }
            Side::Left => {
                // Right descents of the inverse, read off without building it.
                if s == 0 {
                    self.position_of(1).1
                } else {
                    let inv = |value: i8| {
                        let (pos, neg) = self.position_of(value);
                        let p = pos as i32 + 1;
                        if neg {
                            -p
                        } else {
                            p
                        }
                    };
                    inv(s as i8) > inv(s as i8 + 1)
                }
            }
        }
    }

    pub fn descents(&self, side: Side) -> Vec<Generator> {
        self.system()
            .generators()
            .into_iter()
            .filter(|&s| self.is_descent(s, side))
            .collect()
    }

    /// Descent set as a bit mask indexed by generator.
    pub fn descent_mask(&self, side: Side) -> u64 {
        self.descents(side).iter().fold(0, |m, &s| m | 1 << s)
    }

    /// One reduced expression, obtained by stripping right descents.
    pub fn reduced_word(&self) -> Vec<Generator> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        let gens = self.system().generators();
        'outer: while !w.is_identity() {
            for &s in &gens {
                if w.is_descent(s, Side::Right) {
                    word.push(s);
                    w = w.right_mul_gen(s);
                    continue 'outer;
                }
            }
            unreachable!("non-identity element without descents");
        }
        word.reverse();
        word
    }

    /// Bruhat order. Type A uses rank-matrix dominance; type B uses the
    /// descent recursion of [`bruhat_leq_by_descents`].
    pub fn bruhat_leq(&self, other: &CoxeterElement) -> Result<bool> {
        if self.system() != other.system() {
            return Err(Error::SystemMismatch);
        }
        Ok(match self.family {
            Family::A => bruhat_leq_rank_matrix(&self.images, &other.images),
            Family::B => bruhat_leq_by_descents(self, other),
        })
    }

    /// Dense index used by group enumeration: Lehmer code rank of `|w|`,
    /// times `2^n` plus the sign mask in type B.
    pub fn rank_index(&self) -> usize {
        let n = self.images.len();
        let mut rank = 0usize;
        for i in 0..n {
            let ai = self.images[i].abs();
            let smaller = self.images[i + 1..].iter().filter(|v| v.abs() < ai).count();
            rank = rank * (n - i) + smaller;
        }
        if self.family == Family::B {
            let mask = self
                .images
                .iter()
                .enumerate()
                .fold(0usize, |m, (i, &v)| if v < 0 { m | 1 << i } else { m });
            rank = (rank << n) | mask;
        }
        rank
    }
}

fn bruhat_leq_rank_matrix(x: &[i8], y: &[i8]) -> bool {
    let n = x.len();
    // counts[a] = #{j <= b : x_j >= a} - #{j <= b : y_j >= a}, updated per column b.
    let mut diff = vec![0i32; n + 2];
    for b in 0..n {
        let xa = x[b] as usize;
        let ya = y[b] as usize;
        for (a, d) in diff.iter_mut().enumerate().take(n + 1).skip(1) {
            if xa >= a {
                *d += 1;
            }
            if ya >= a {
                *d -= 1;
            }
        }
        if diff[1..=n].iter().any(|&d| d > 0) {
            return false;
        }
    }
    true
}

/// Bruhat order via the lifting property: for `s` a left descent of `w`,
/// `x <= w` iff `sx <= sw` when `s` is also a descent of `x`, and iff
/// `x <= sw` otherwise.
pub fn bruhat_leq_by_descents(x: &CoxeterElement, w: &CoxeterElement) -> bool {
    let mut x = x.clone();
    let mut w = w.clone();
    let gens = w.system().generators();
    loop {
        if x.length() > w.length() {
            return false;
        }
        let Some(&s) = gens.iter().find(|&&s| w.is_descent(s, Side::Left)) else {
            return x.is_identity();
        };
        if x.is_descent(s, Side::Left) {
            x = x.left_mul_gen(s);
        }
        w = w.left_mul_gen(s);
    }
}

impl fmt::Display for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &v in &self.images {
            if v < 0 {
                f.write_str("-")?;
            }
            write!(f, "{}", digit_char(v.unsigned_abs() as usize))?;
        }
        Ok(())
    }
}

impl fmt::Debug for CoxeterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Generators of the standard parabolic subgroup of `S_n` attached to a
/// composition `lambda`: consecutive blocks `{s_1 .. s_{l1-1}}`,
/// `{s_{l1+1} .. s_{l1+l2-1}}`, ...
pub fn composition_generators(lambda: &[usize], n: usize) -> Result<Vec<Generator>> {
    if lambda.contains(&0) || lambda.iter().sum::<usize>() != n {
        return Err(Error::InvalidPartition(format!("{lambda:?} is not a composition of {n}")));
    }
    let mut gens = Vec::new();
    let mut start = 1;
    for &part in lambda {
        gens.extend(start..start + part - 1);
        start += part;
    }
    Ok(gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> CoxeterElement {
        parse_perm(s, s.chars().count()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let x = a("2143");
        assert_eq!(x.images(), &[2, 1, 4, 3]);
        let big = parse_perm("438721a965cb", 12).unwrap();
        assert_eq!(big.images()[6], 10);
        assert!(a("123").is_identity());
        assert!(parse_perm("1223", 4).is_err());
        assert!(parse_perm("123", 4).is_err());
        assert!(parse_perm("1205", 4).is_err());
        assert!(matches!(CoxeterSystem::type_a(36), Err(Error::UnsupportedDegree(36))));
    }

    #[test]
    fn type_b_parse_and_display() {
        let b2 = CoxeterSystem::type_b(2).unwrap();
        let w = b2.parse("-21").unwrap();
        assert_eq!(w.images(), &[-2, 1]);
        assert_eq!(w.to_string(), "-21");
        assert!(b2.parse("--21").is_err());
        assert!(b2.parse("22").is_err());
    }

    #[test]
    fn lengths() {
        assert_eq!(a("21654387").length(), 8);
        assert_eq!(parse_perm("438721a965cb", 12).unwrap().length(), 22);
        assert_eq!(a("1234").length(), 0);
        let b2 = CoxeterSystem::type_b(2).unwrap();
        assert_eq!(b2.longest_element().length(), 4);
        assert_eq!(b2.generator(0).unwrap().length(), 1);
        assert_eq!(b2.generator(1).unwrap().length(), 1);
    }

    #[test]
    fn descents_examples() {
        let s2 = a("21");
        assert_eq!(s2.descents(Side::Left), vec![1]);
        assert_eq!(s2.descents(Side::Right), vec![1]);
        assert!(a("1234").descents(Side::Left).is_empty());
        let b2 = CoxeterSystem::type_b(2).unwrap();
        let sts = b2.word_to_elt(&[0, 1, 0]).unwrap();
        assert_eq!(sts.descents(Side::Left), vec![0]);
        assert_eq!(sts.descents(Side::Right), vec![0]);
    }

    #[test]
    fn descents_match_length_drop() {
        for sys in [CoxeterSystem::type_a(4).unwrap(), CoxeterSystem::type_b(3).unwrap()] {
            for w in sys.elements() {
                for s in sys.generators() {
                    for side in [Side::Left, Side::Right] {
                        let shorter = w.mul_gen(s, side).length() < w.length();
                        assert_eq!(w.is_descent(s, side), shorter, "{w} {s} {side:?}");
                    }
                }
                assert_eq!(w.length(), w.inverse().length());
                assert_eq!(w.descents(Side::Left), w.inverse().descents(Side::Right));
            }
        }
    }

    #[test]
    fn generator_multiplication_agrees_with_mul() {
        let sys = CoxeterSystem::type_b(3).unwrap();
        for w in sys.elements() {
            for s in sys.generators() {
                let g = sys.generator(s).unwrap();
                assert_eq!(w.right_mul_gen(s), w.mul(&g).unwrap());
                assert_eq!(w.left_mul_gen(s), g.mul(&w).unwrap());
            }
            assert!(w.mul(&w.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn products() {
        let s1 = CoxeterSystem::type_a(3).unwrap().generator(1).unwrap();
        assert!(s1.mul(&s1).unwrap().is_identity());
        let x = a("2143");
        assert!(x.mul(&x).unwrap().is_identity());
        assert_eq!(x.mul(&a("123")), Err(Error::SystemMismatch));
    }

    #[test]
    fn words() {
        let sys = CoxeterSystem::type_a(12).unwrap();
        let word = parse_word("b567895678712345123431").unwrap();
        assert_eq!(word.len(), 22);
        assert_eq!(sys.word_to_elt(&word).unwrap().to_string(), "438721a965cb");
        assert!(sys.word_to_elt(&[]).unwrap().is_identity());
        assert!(sys.word_to_elt(&[12]).is_err());
        assert_eq!(parse_word("11, 5,6").unwrap(), vec![11, 5, 6]);
        let w = a("4231");
        assert_eq!(CoxeterSystem::type_a(4).unwrap().word_to_elt(&w.reduced_word()).unwrap(), w);
    }

    #[test]
    fn reduced_words_have_length() {
        let sys = CoxeterSystem::type_b(3).unwrap();
        for w in sys.elements() {
            let word = w.reduced_word();
            assert_eq!(word.len(), w.length());
            assert_eq!(sys.word_to_elt(&word).unwrap(), w);
        }
    }

    #[test]
    fn parabolic_longest() {
        let s8 = CoxeterSystem::type_a(8).unwrap();
        assert_eq!(s8.longest_parabolic_elt(&[1, 3, 4, 5, 7]).unwrap().to_string(), "21654387");
        let s4 = CoxeterSystem::type_a(4).unwrap();
        assert_eq!(s4.longest_parabolic_elt(&[1]).unwrap().to_string(), "2134");
        assert_eq!(s4.longest_parabolic_elt(&s4.generators()).unwrap(), s4.longest_element());
        let b3 = CoxeterSystem::type_b(3).unwrap();
        assert_eq!(b3.longest_parabolic_elt(&b3.generators()).unwrap(), b3.longest_element());
        assert_eq!(composition_generators(&[3, 1, 3, 1], 8).unwrap(), vec![1, 2, 5, 6]);
        assert!(composition_generators(&[3, 0, 1], 4).is_err());
    }

    #[test]
    fn bruhat_examples() {
        assert!(a("21654387").bruhat_leq(&a("62845173")).unwrap());
        assert!(a("1234").bruhat_leq(&a("3412")).unwrap());
        assert!(!a("4123").bruhat_leq(&a("3412")).unwrap());
        assert!(!a("2143").bruhat_leq(&a("3124")).unwrap());
    }

    #[test]
    fn bruhat_routes_agree_exhaustively_on_s4() {
        let sys = CoxeterSystem::type_a(4).unwrap();
        let els = sys.elements();
        for x in &els {
            for y in &els {
                assert_eq!(x.bruhat_leq(y).unwrap(), bruhat_leq_by_descents(x, y), "{x} {y}");
            }
        }
    }

    #[test]
    fn rank_index_is_a_bijection() {
        for sys in [CoxeterSystem::type_a(5).unwrap(), CoxeterSystem::type_b(3).unwrap()] {
            let mut seen = vec![false; sys.order() as usize];
            for w in sys.elements() {
                let r = w.rank_index();
                assert!(!seen[r]);
                seen[r] = true;
            }
            assert!(seen.iter().all(|&b| b));
        }
    }

    #[test]
    fn braid_orders() {
        let b3 = CoxeterSystem::type_b(3).unwrap();
        assert_eq!(b3.braid_order(0, 1), 4);
        assert_eq!(b3.braid_order(1, 2), 3);
        assert_eq!(b3.braid_order(0, 2), 2);
        for s in b3.generators() {
            for t in b3.generators() {
                if s == t {
                    continue;
                }
                let m = b3.braid_order(s, t) as usize;
                let st = b3.generator(s).unwrap().mul(&b3.generator(t).unwrap()).unwrap();
                let mut p = b3.identity();
                for k in 1..=m {
                    p = p.mul(&st).unwrap();
                    assert_eq!(p.is_identity(), k == m);
                }
            }
        }
    }
}
