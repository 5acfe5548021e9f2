//! Reverse decomposition: for `g` in the exterior square of `GL_n`
//! (`n ≥ 4`) and any level generator `ξ` of `g`, a word of exactly 8, 16,
//! 24 or 48 elementary conjugates `h⁻¹·g^{±1}·h` whose product is
//! `∧²t_{k,l}(ξ)`.
//!
//! Every construction step is checked on the actual matrices as it is
//! taken, and the final word is multiplied out and compared before it is
//! returned.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exterior::{cauchy_binet, monomial_route_source, monomial_route_target};
use crate::indexing::{canon, height, rank_from_pair_count, sign, Index2, RawPair, Sign};
use crate::level::{GeneratorKind, LevelGenerator};
use crate::linalg::{InvPair, SquareMatrix};
use crate::pluecker::{is_member, parabolic_zero_check, ColumnVector};
use crate::ring::{RingDescriptor, RingElem};
use crate::stabilizer::t_star_col;
use crate::words::{ConjTerm, ConjWord, ElemWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetKind {
    /// The entry `g_{I,J}`, `I ≠ J`.
    Entry { row: Index2, col: Index2 },
    /// The difference `g_{I,I} − g_{J,J}`, `I ≠ J`.
    DiagDiff { first: Index2, second: Index2 },
}

/// Which level generator to realize, and as which transvection `∧²t_{k,l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorTarget {
    pub kind: TargetKind,
    pub k: usize,
    pub l: usize,
}

impl GeneratorTarget {
    pub fn entry(row: Index2, col: Index2, k: usize, l: usize) -> GeneratorTarget {
        GeneratorTarget { kind: TargetKind::Entry { row, col }, k, l }
    }

    pub fn diag(first: Index2, second: Index2, k: usize, l: usize) -> GeneratorTarget {
        GeneratorTarget { kind: TargetKind::DiagDiff { first, second }, k, l }
    }

    pub fn from_level(gen: &LevelGenerator, k: usize, l: usize) -> GeneratorTarget {
        match gen.kind {
            GeneratorKind::Entry { row, col } => GeneratorTarget::entry(row, col, k, l),
            GeneratorKind::DiagDiff { first, next } => GeneratorTarget::diag(first, next, k, l),
        }
    }

    /// The case this target falls into.
    pub fn case(&self) -> Result<CaseTag> {
        let (a, b, diag) = match self.kind {
            TargetKind::Entry { row, col } => (row, col, false),
            TargetKind::DiagDiff { first, second } => (first, second, true),
        };
        match (height(&a, &b), diag) {
            (1, false) => Ok(CaseTag::H1Entry),
            (0, false) => Ok(CaseTag::H0Entry),
            (1, true) => Ok(CaseTag::H1Diag),
            (0, true) => Ok(CaseTag::H0Diag),
            _ => Err(Error::Height(format!("{a} and {b} coincide"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    H1Entry,
    H0Entry,
    H1Diag,
    H0Diag,
}

impl CaseTag {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::H1Entry => "h1-entry",
            CaseTag::H0Entry => "h0-entry",
            CaseTag::H1Diag => "h1-diag",
            CaseTag::H0Diag => "h0-diag",
        }
    }

    /// The exact number of elementary conjugates produced for this case.
    pub fn word_length(self) -> usize {
        match self {
            CaseTag::H1Entry => 8,
            CaseTag::H0Entry => 16,
            CaseTag::H1Diag => 24,
            CaseTag::H0Diag => 48,
        }
    }

    pub fn parse(s: &str) -> Result<CaseTag> {
        [CaseTag::H1Entry, CaseTag::H0Entry, CaseTag::H1Diag, CaseTag::H0Diag]
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown case {s:?}")))
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionResult {
    pub case: CaseTag,
    pub word: ConjWord,
    /// The `ξ` with `conj_eval(word, g) = ∧²t_{k,l}(ξ)`.
    pub param: RingElem,
    pub certificates: Vec<Certificate>,
}

impl DecompositionResult {
    pub fn all_certified(&self) -> bool {
        self.certificates.iter().all(|c| c.ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "case": self.case.as_str(),
            "word": self.word.to_json(),
            "param": self.param.to_json(),
            "certificates": self.certificates.iter()
                .map(|c| json!({"name": c.name, "ok": c.ok}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value, ring: &RingDescriptor) -> Result<DecompositionResult> {
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("result without {k}")));
        let case =
            CaseTag::parse(field("case")?.as_str().ok_or_else(|| Error::Parse("case must be a string".into()))?)?;
        let certificates = field("certificates")?
            .as_array()
            .ok_or_else(|| Error::Parse("certificates must be an array".into()))?
            .iter()
            .map(|c| {
                Ok(Certificate {
                    name: c
                        .get("name")
                        .and_then(Value::as_str)
                        .ok_or_else(|| Error::Parse("certificate without name".into()))?
                        .to_string(),
                    ok: c
                        .get("ok")
                        .and_then(Value::as_bool)
                        .ok_or_else(|| Error::Parse("certificate without ok".into()))?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(DecompositionResult {
            case,
            word: ConjWord::from_json(field("word")?, ring)?,
            param: ring.elem_from_json(field("param")?)?,
            certificates,
        })
    }
}

/// Parses a target pair written as `[a, b]` in JSON.
pub fn pair_from_json(v: &Value, n: usize) -> Result<Index2> {
    let raw: RawPair = serde_json::from_value(v.clone())?;
    raw.resolve(n)
}

fn certify(certs: &mut Vec<Certificate>, name: &str, ok: bool) -> Result<()> {
    certs.push(Certificate { name: name.to_string(), ok });
    if ok {
        Ok(())
    } else {
        Err(Error::StepViolated(name.to_string()))
    }
}

fn signed(s: Sign, e: &RingElem) -> RingElem {
    match s {
        Sign::Plus => e.clone(),
        Sign::Minus => -e,
    }
}

/// Decomposes against a fixed `g`, checking membership once.
#[derive(Clone, Debug)]
pub struct Decomposer<'a> {
    g: &'a InvPair,
    n: usize,
    ring: RingDescriptor,
}

impl<'a> Decomposer<'a> {
    pub fn new(g: &'a InvPair) -> Result<Decomposer<'a>> {
        let n = rank_from_pair_count(g.dim())
            .ok_or_else(|| Error::DimensionMismatch(format!("{} is not C(n,2)", g.dim())))?;
        if n < 4 {
            return Err(Error::RankTooSmall(format!("reverse decomposition needs n ≥ 4, got {n}")));
        }
        if !is_member(g.fwd())? {
            return Err(Error::Membership);
        }
        Ok(Decomposer { g, n, ring: g.ring().clone() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn decompose(&self, target: &GeneratorTarget) -> Result<DecompositionResult> {
        let (k, l) = (target.k, target.l);
        if k == 0 || l == 0 || k > self.n || l > self.n || k == l {
            return Err(Error::BadIndex(format!("target ∧²t_{{{k},{l}}} in rank {}", self.n)));
        }
        let case = target.case()?;
        let mut certs = Vec::new();
        let (word, param) = match target.kind {
            TargetKind::Entry { row, col } => {
                self.check_pairs(&[row, col])?;
                match case {
                    CaseTag::H1Entry => self.entry_h1(self.g, &row, &col, k, l, &mut certs)?,
                    _ => self.entry_h0(&row, &col, k, l, &mut certs)?,
                }
            }
            TargetKind::DiagDiff { first, second } => {
                self.check_pairs(&[first, second])?;
                match case {
                    CaseTag::H1Diag => self.diag_h1(&first, &second, k, l, &mut certs)?,
                    _ => self.diag_h0(&first, &second, k, l, &mut certs)?,
                }
            }
        };
        self.finish(case, word, param, k, l, certs)
    }

    fn check_pairs(&self, pairs: &[Index2]) -> Result<()> {
        match pairs.iter().find(|p| p.n() != self.n) {
            Some(p) => Err(Error::BadIndex(format!("{p} has rank {} but g has rank {}", p.n(), self.n))),
            None => Ok(()),
        }
    }

    fn finish(
        &self,
        case: CaseTag,
        mut word: ConjWord,
        param: RingElem,
        k: usize,
        l: usize,
        mut certs: Vec<Certificate>,
    ) -> Result<DecompositionResult> {
        word = word.reduced();
        for t in 0..word.len() {
            if crate::fault::epsilon_hook(t) {
                word.flip_eps(t);
            }
        }
        certify(&mut certs, "length", word.len() == case.word_length())?;
        certify(&mut certs, "verified", verify(&word, self.g, k, l, &param)?)?;
        Ok(DecompositionResult { case, word, param, certificates: certs })
    }

    fn pair(&self, a: usize, b: usize) -> Index2 {
        canon(a, b, self.n).expect("distinct indices in range").0
    }

    fn entry(g: &InvPair, a: &Index2, b: &Index2) -> RingElem {
        g.fwd().get(a.rank(), b.rank()).clone()
    }

    /// Eight conjugates of `g` multiplying to `∧²t_{k,l}(g_{I,J})`, for
    /// `|I ∩ J| = 1`.
    ///
    /// After moving the entry to `({1,3},{1,2})` by a monomial `W`,
    /// `g′ = W·g·W⁻¹` has a stabilizer `T` of its column `{1,2}`, so
    /// `h = g′⁻¹·T·g′` has that column standard. Then
    /// `z = [T⁻¹h, ∧²t_{2,3}(1)]^{T⁻¹} = [h, ∧²t_{2,3}(1)]·[∧²t_{2,3}(1), T]`
    /// is four conjugates of `g′^{±1}`, lies in `U·∧²t_{2,1}(ξ)` with `U` the
    /// abelian radical, and `[∧²t_{1,3}(−1), z] = ∧²t_{2,3}(ξ)`.
    fn entry_h1(
        &self,
        g: &InvPair,
        big_i: &Index2,
        big_j: &Index2,
        k: usize,
        l: usize,
        certs: &mut Vec<Certificate>,
    ) -> Result<(ConjWord, RingElem)> {
        self.scaled_entry_h1(g, big_i, big_j, &self.ring.one(), k, l, certs)
    }

    /// As [`Self::entry_h1`] for `∧²t_{k,l}(r·g_{I,J})`: the outer commutator
    /// uses `∧²t_{1,3}(−r)`.
    #[allow(clippy::too_many_arguments)]
    fn scaled_entry_h1(
        &self,
        g: &InvPair,
        big_i: &Index2,
        big_j: &Index2,
        r: &RingElem,
        k: usize,
        l: usize,
        certs: &mut Vec<Certificate>,
    ) -> Result<(ConjWord, RingElem)> {
        let n = self.n;
        let ring = &self.ring;
        let one = ring.one();
        let i12 = self.pair(1, 2);
        let i13 = self.pair(1, 3);

        let (route, sigma) = monomial_route_source(big_i, big_j, n, ring)?;
        let gp = route.conjugate_left(g)?;
        let target = Self::entry(g, big_i, big_j);
        let xi = Self::entry(&gp, &i13, &i12);
        certify(certs, "route-source", xi == signed(sigma, &target))?;

        let col = ColumnVector::from_column(gp.fwd(), &i12)?;
        let t = t_star_col(1, &col.neg())?;
        let tp = t.eval(ring)?;
        certify(certs, "T-fixes-column", tp.fwd().mul_vec(col.entries())? == col.entries())?;

        let h = gp.invert().compose_unchecked(&tp).compose_unchecked(&gp);
        let block = parabolic_zero_check(h.fwd(), &i12);
        certify(certs, "h-in-parabolic", block.is_ok())?;
        certify(certs, "submaximal-zeros", block == Ok(true))?;

        let t_inv = t.invert();
        let u_inv = ElemWord::letter(n, 2, 3, -&one)?;
        let z = ConjWord::new(
            n,
            vec![
                ConjTerm { eps: Sign::Minus, h: t.concat(&t_inv)? },
                ConjTerm { eps: Sign::Plus, h: t_inv.clone() },
                ConjTerm { eps: Sign::Minus, h: u_inv.concat(&t_inv)? },
                ConjTerm { eps: Sign::Plus, h: t.concat(&u_inv)?.concat(&t_inv)? },
            ],
        )?;
        let zm = z.eval(&gp)?;
        let radical_part = zm.mul(ElemWord::letter(n, 2, 1, -&xi)?.eval(ring)?.fwd())?;
        certify(certs, "z-radical", in_radical(&radical_part, n)?)?;

        let v_inv = ElemWord::letter(n, 1, 3, r.clone())?;
        let word = z.conjugated_by(&v_inv)?.concat(&z.invert())?;
        let expect = ElemWord::letter(n, 2, 3, r * &xi)?.eval(ring)?;
        certify(certs, "commutator-product", &word.eval(&gp)? == expect.fwd())?;

        let word = word.pulled_back(&route.invert())?.conjugated_by(&monomial_route_target(k, l, n, ring)?.invert())?;
        let word = match sigma {
            Sign::Plus => word,
            Sign::Minus => word.invert(),
        };
        Ok((word, r * &target))
    }

    /// Sixteen conjugates for `∧²t_{k,l}(g_{A,B})`, `A ∩ B = ∅`.
    ///
    /// With `A = {j, h₁}`, `B = {i, h₂}` and `g₁ = g^{∧²t_{i,j}(−1)}`, the
    /// entries at `({i,h₁},{i,h₂})` of `g₁` and `g` differ by `±g_{A,B}`.
    fn entry_h0(
        &self,
        a: &Index2,
        b: &Index2,
        k: usize,
        l: usize,
        certs: &mut Vec<Certificate>,
    ) -> Result<(ConjWord, RingElem)> {
        let [j, h1] = a.as_array();
        let [i, h2] = b.as_array();
        let shift = ElemWord::letter(self.n, i, j, -&self.ring.one())?;
        let g1 = shift.conjugate_right(self.g)?;
        let (r, c) = (self.pair(i, h1), self.pair(i, h2));
        let (w1, p1) = self.entry_h1(&g1, &r, &c, k, l, certs)?;
        let w1 = w1.pulled_back(&shift)?;
        let (w2, p2) = self.entry_h1(self.g, &r, &c, k, l, certs)?;
        let (word, value) = match sign(i, h1) {
            Sign::Plus => (w1.concat(&w2.invert())?, &p1 - &p2),
            Sign::Minus => (w1.invert().concat(&w2)?, &p2 - &p1),
        };
        let target = Self::entry(self.g, a, b);
        certify(certs, "additivity-seam", value == target)?;
        Ok((word, target))
    }

    /// Twenty-four conjugates for `∧²t_{k,l}(g_{I,I} − g_{J,J})`,
    /// `I = {i,h}`, `J = {j,h}`.
    fn diag_h1(
        &self,
        big_i: &Index2,
        big_j: &Index2,
        k: usize,
        l: usize,
        certs: &mut Vec<Certificate>,
    ) -> Result<(ConjWord, RingElem)> {
        let h = big_i.intersection(big_j)[0];
        let i = big_i.other(h).expect("h ∈ I");
        let j = big_j.other(h).expect("h ∈ J");
        let shift = ElemWord::letter(self.n, i, j, self.ring.one())?;
        let g1 = shift.conjugate_right(self.g)?;
        let (w1, p1) = self.entry_h1(&g1, big_i, big_j, k, l, certs)?;
        let w1 = w1.pulled_back(&shift)?;
        let (w_ji, p_ji) = self.entry_h1(self.g, big_j, big_i, k, l, certs)?;
        let (w_ij, p_ij) = self.entry_h1(self.g, big_i, big_j, k, l, certs)?;
        let (word, value) = match sign(i, h) * sign(j, h) {
            Sign::Plus => (w1.concat(&w_ji)?.concat(&w_ij.invert())?, &(&p1 + &p_ji) - &p_ij),
            Sign::Minus => (w1.invert().concat(&w_ji.invert())?.concat(&w_ij)?, &(&p_ij - &p1) - &p_ji),
        };
        let target = &Self::entry(self.g, big_i, big_i) - &Self::entry(self.g, big_j, big_j);
        certify(certs, "diagonal-seam", value == target)?;
        Ok((word, target))
    }

    /// Forty-eight conjugates for `∧²t_{k,l}(g_{I,I} − g_{J,J})`,
    /// `I ∩ J = ∅`, through `K = {min I, min J}`.
    fn diag_h0(
        &self,
        big_i: &Index2,
        big_j: &Index2,
        k: usize,
        l: usize,
        certs: &mut Vec<Certificate>,
    ) -> Result<(ConjWord, RingElem)> {
        let big_k = self.pair(big_i.first(), big_j.first());
        let (w1, p1) = self.diag_h1(big_i, &big_k, k, l, certs)?;
        let (w2, p2) = self.diag_h1(&big_k, big_j, k, l, certs)?;
        let target = &Self::entry(self.g, big_i, big_i) - &Self::entry(self.g, big_j, big_j);
        certify(certs, "telescoping-seam", &p1 + &p2 == target)?;
        Ok((w1.concat(&w2)?, target))
    }
}

/// A generator of the level realized by exactly eight conjugates.
///
/// There are `N² − 1` of them and they generate the same ideal as the
/// level generators, so any `∧²t_{k,l}(ξ)` with `ξ` in the level is a
/// product of at most `8(N² − 1)` conjugates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShortGenerator {
    /// `g_{I,J}` with `|I ∩ J| = 1`.
    Entry { row: Index2, col: Index2 },
    /// For disjoint `A = {j,h₁}`, `B = {i,h₂}`: the entry at
    /// `({i,h₁},{i,h₂})` of `g^{∧²t_{i,j}(−1)}`.
    ShiftedEntry { row: Index2, col: Index2 },
    /// For `I = {i,h}`, `J = {j,h}`: the entry at `(I, J)` of
    /// `g^{∧²t_{i,j}(1)}`.
    ShiftedDiag { first: Index2, second: Index2 },
}

/// The pair joined to `p` in a spanning tree of pairs with height-one
/// edges, rooted at `{1,2}`.
fn tree_parent(p: &Index2) -> Option<Index2> {
    let n = p.n();
    match p.as_array() {
        [1, 2] => None,
        [1, _] => canon(1, 2, n).ok().map(|c| c.0),
        [_, b] => canon(1, b, n).ok().map(|c| c.0),
    }
}

/// All short generators: height-one entries, one shifted entry per
/// disjoint ordered pair, and one shifted diagonal per tree edge.
pub fn short_generators(n: usize) -> Vec<ShortGenerator> {
    let pairs = crate::indexing::all_pairs(n);
    let mut out = Vec::new();
    for a in &pairs {
        for b in pairs.iter().filter(|b| height(a, b) == 1) {
            out.push(ShortGenerator::Entry { row: *a, col: *b });
        }
    }
    for a in &pairs {
        for b in pairs.iter().filter(|b| height(a, b) == 0) {
            out.push(ShortGenerator::ShiftedEntry { row: *a, col: *b });
        }
    }
    for p in &pairs {
        if let Some(q) = tree_parent(p) {
            out.push(ShortGenerator::ShiftedDiag { first: *p, second: q });
        }
    }
    out
}

/// A verified word for `∧²t_{k,l}(ξ)` with `ξ` a combination of level
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelWord {
    pub word: ConjWord,
    pub param: RingElem,
    pub certificates: Vec<Certificate>,
}

impl<'a> Decomposer<'a> {
    /// The conjugating letter and the entry position for a short generator.
    fn short_parts(&self, s: &ShortGenerator) -> Result<(Option<ElemWord>, Index2, Index2)> {
        let n = self.n;
        let one = self.ring.one();
        Ok(match *s {
            ShortGenerator::Entry { row, col } => {
                if height(&row, &col) != 1 {
                    return Err(Error::Height(format!("({row},{col}) is not height one")));
                }
                (None, row, col)
            }
            ShortGenerator::ShiftedEntry { row, col } => {
                if height(&row, &col) != 0 {
                    return Err(Error::Height(format!("({row},{col}) is not height zero")));
                }
                let [j, h1] = row.as_array();
                let [i, h2] = col.as_array();
                (Some(ElemWord::letter(n, i, j, -&one)?), self.pair(i, h1), self.pair(i, h2))
            }
            ShortGenerator::ShiftedDiag { first, second } => {
                if height(&first, &second) != 1 {
                    return Err(Error::Height(format!("({first},{second}) is not height one")));
                }
                let h = first.intersection(&second)[0];
                let i = first.other(h).expect("h ∈ I");
                let j = second.other(h).expect("h ∈ J");
                (Some(ElemWord::letter(n, i, j, one)?), first, second)
            }
        })
    }

    /// The value of a short generator at `g`.
    pub fn short_value(&self, s: &ShortGenerator) -> Result<RingElem> {
        let (shift, a, b) = self.short_parts(s)?;
        Ok(match shift {
            None => Self::entry(self.g, &a, &b),
            Some(w) => Self::entry(&w.conjugate_right(self.g)?, &a, &b),
        })
    }

    /// Eight conjugates of `g` multiplying to `∧²t_{k,l}(r·s(g))`.
    pub fn short_word(
        &self,
        s: &ShortGenerator,
        r: &RingElem,
        k: usize,
        l: usize,
        certs: &mut Vec<Certificate>,
    ) -> Result<(ConjWord, RingElem)> {
        let (shift, a, b) = self.short_parts(s)?;
        match shift {
            None => self.scaled_entry_h1(self.g, &a, &b, r, k, l, certs),
            Some(w) => {
                let g1 = w.conjugate_right(self.g)?;
                let (word, value) = self.scaled_entry_h1(&g1, &a, &b, r, k, l, certs)?;
                Ok((word.pulled_back(&w)?, value))
            }
        }
    }

    /// A signed combination of short generators equal to the level
    /// generator `gen` at every `g`.
    pub fn express(&self, gen: &GeneratorKind) -> Result<Vec<(ShortGenerator, Sign)>> {
        match *gen {
            GeneratorKind::Entry { row, col } => match height(&row, &col) {
                1 => Ok(vec![(ShortGenerator::Entry { row, col }, Sign::Plus)]),
                0 => {
                    let [_, h1] = row.as_array();
                    let [i, h2] = col.as_array();
                    let s = sign(i, h1);
                    Ok(vec![
                        (ShortGenerator::ShiftedEntry { row, col }, s),
                        (ShortGenerator::Entry { row: self.pair(i, h1), col: self.pair(i, h2) }, -s),
                    ])
                }
                _ => Err(Error::Height(format!("{row} is on the diagonal"))),
            },
            GeneratorKind::DiagDiff { first, next } => {
                let mut out = self.to_root(&first, Sign::Plus);
                out.extend(self.to_root(&next, Sign::Minus));
                Ok(out)
            }
        }
    }

    /// `±(g_{P,P} − g_{root,root})` along the tree path from `p`.
    fn to_root(&self, p: &Index2, outer: Sign) -> Vec<(ShortGenerator, Sign)> {
        let mut out = Vec::new();
        let mut cur = *p;
        while let Some(q) = tree_parent(&cur) {
            let h = cur.intersection(&q)[0];
            let s = outer * sign(cur.other(h).unwrap(), h) * sign(q.other(h).unwrap(), h);
            out.push((ShortGenerator::ShiftedDiag { first: cur, second: q }, s));
            out.push((ShortGenerator::Entry { row: cur, col: q }, -s));
            out.push((ShortGenerator::Entry { row: q, col: cur }, s));
            cur = q;
        }
        out
    }

    /// One word for `∧²t_{k,l}(Σ rₘ·genₘ)`, using each short generator at
    /// most once: at most `8(N² − 1)` conjugates.
    pub fn level_element(&self, combination: &[(GeneratorKind, RingElem)], k: usize, l: usize) -> Result<LevelWord> {
        let mut coeffs: Vec<(ShortGenerator, RingElem)> = Vec::new();
        let mut want = self.ring.zero();
        for (gen, r) in combination {
            want = &want + &(r * &self.generator_value(gen));
            for (s, e) in self.express(gen)? {
                let c = signed(e, r);
                match coeffs.iter_mut().find(|(t, _)| *t == s) {
                    Some((_, acc)) => *acc = &*acc + &c,
                    None => coeffs.push((s, c)),
                }
            }
        }
        let mut certs = Vec::new();
        let mut word = ConjWord::empty(self.n);
        let mut param = self.ring.zero();
        for (s, r) in coeffs.iter().filter(|(_, r)| !r.is_zero()) {
            let (w, v) = self.short_word(s, r, k, l, &mut certs)?;
            word = word.concat(&w)?;
            param = &param + &v;
        }
        let word = word.reduced();
        certify(&mut certs, "combination", param == want)?;
        let bound = 8 * (self.g.dim() * self.g.dim() - 1);
        certify(&mut certs, "length-bound", word.len() <= bound)?;
        certify(&mut certs, "verified", verify(&word, self.g, k, l, &param)?)?;
        Ok(LevelWord { word, param, certificates: certs })
    }

    fn generator_value(&self, gen: &GeneratorKind) -> RingElem {
        match gen {
            GeneratorKind::Entry { row, col } => Self::entry(self.g, row, col),
            GeneratorKind::DiagDiff { first, next } => {
                &Self::entry(self.g, first, first) - &Self::entry(self.g, next, next)
            }
        }
    }
}

/// Whether `y` is `∧²(e + A)` with `A` supported on rows `1, 2` and
/// columns `3..n`, read off row `{1,2}` of `y`.
fn in_radical(y: &SquareMatrix, n: usize) -> Result<bool> {
    let ring = y.ring();
    let r12 = canon(1, 2, n)?.0.rank();
    let mut x = SquareMatrix::identity(n, ring);
    for j in 3..=n {
        let a2 = y.get(r12, canon(1, j, n)?.0.rank()).clone();
        let a1 = -y.get(r12, canon(2, j, n)?.0.rank());
        x = x.with_entry(0, j - 1, a1)?.with_entry(1, j - 1, a2)?;
    }
    Ok(&cauchy_binet(&x)? == y)
}

/// Decomposes one target, checking membership of `g` first.
pub fn decompose(g: &InvPair, target: &GeneratorTarget) -> Result<DecompositionResult> {
    Decomposer::new(g)?.decompose(target)
}

fn with_case(g: &InvPair, target: GeneratorTarget, case: CaseTag) -> Result<DecompositionResult> {
    let found = target.case()?;
    if found != case {
        return Err(Error::Height(format!("target is {found}, not {case}")));
    }
    decompose(g, &target)
}

pub fn decompose_entry_h1(g: &InvPair, i: Index2, j: Index2, k: usize, l: usize) -> Result<DecompositionResult> {
    with_case(g, GeneratorTarget::entry(i, j, k, l), CaseTag::H1Entry)
}

pub fn decompose_entry_h0(g: &InvPair, a: Index2, b: Index2, k: usize, l: usize) -> Result<DecompositionResult> {
    with_case(g, GeneratorTarget::entry(a, b, k, l), CaseTag::H0Entry)
}

pub fn decompose_diag_h1(g: &InvPair, i: Index2, j: Index2, k: usize, l: usize) -> Result<DecompositionResult> {
    with_case(g, GeneratorTarget::diag(i, j, k, l), CaseTag::H1Diag)
}

pub fn decompose_diag_h0(g: &InvPair, i: Index2, j: Index2, k: usize, l: usize) -> Result<DecompositionResult> {
    with_case(g, GeneratorTarget::diag(i, j, k, l), CaseTag::H0Diag)
}

/// Whether `word` evaluated at `g` equals `∧²t_{k,l}(ξ)`.
pub fn verify(word: &ConjWord, g: &InvPair, k: usize, l: usize, xi: &RingElem) -> Result<bool> {
    let lhs = word.eval(g)?;
    let rhs = ElemWord::letter(word.n(), k, l, xi.clone())?.eval(g.ring())?;
    Ok(&lhs == rhs.fwd())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indexing::all_pairs;
    use crate::level::level_generators;
    use crate::sample::{random_wedge_pair, seeded};

    fn zmod() -> RingDescriptor {
        RingDescriptor::zmod(97).unwrap()
    }

    #[test]
    fn canonical_instance() {
        let r = zmod();
        let mut rng = seeded(7);
        let g = random_wedge_pair(&mut rng, 4, 40, &r).unwrap();
        let i13 = Index2::new(1, 3, 4).unwrap();
        let i12 = Index2::new(1, 2, 4).unwrap();
        let res = decompose_entry_h1(&g, i13, i12, 2, 3).unwrap();
        assert_eq!(res.word.len(), 8);
        assert_eq!(res.param, g.fwd().get(i13.rank(), i12.rank()).clone());
        assert!(res.all_certified());
        assert!(verify(&res.word, &g, 2, 3, &res.param).unwrap());
    }

    #[test]
    fn every_case_and_target_n4() {
        let r = zmod();
        let mut rng = seeded(8);
        let g = random_wedge_pair(&mut rng, 4, 40, &r).unwrap();
        let d = Decomposer::new(&g).unwrap();
        for gen in level_generators(g.fwd()).unwrap() {
            for (k, l) in [(2, 3), (3, 2), (1, 4), (4, 1), (2, 4)] {
                let t = GeneratorTarget::from_level(&gen, k, l);
                let res = d.decompose(&t).unwrap();
                assert_eq!(res.word.len(), res.case.word_length());
                assert_eq!(res.param, gen.value);
            }
        }
    }

    #[test]
    fn diagonal_pairs_all_heights() {
        let r = zmod();
        let mut rng = seeded(9);
        let g = random_wedge_pair(&mut rng, 5, 60, &r).unwrap();
        let d = Decomposer::new(&g).unwrap();
        let pairs = all_pairs(5);
        for a in &pairs {
            for b in pairs.iter().filter(|b| *b != a) {
                let res = d.decompose(&GeneratorTarget::diag(*a, *b, 4, 2)).unwrap();
                let want = g.fwd().get(a.rank(), a.rank()) - g.fwd().get(b.rank(), b.rank());
                assert_eq!(res.param, want);
            }
        }
    }

    #[test]
    fn identity_gives_zero_parameters() {
        let r = zmod();
        let g = InvPair::identity(6, &r);
        let d = Decomposer::new(&g).unwrap();
        for gen in level_generators(g.fwd()).unwrap() {
            let res = d.decompose(&GeneratorTarget::from_level(&gen, 2, 3)).unwrap();
            assert!(res.param.is_zero());
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let r = zmod();
        let g = InvPair::identity(6, &r);
        let p = |a, b| Index2::new(a, b, 4).unwrap();
        assert!(matches!(decompose(&g, &GeneratorTarget::entry(p(1, 2), p(1, 2), 2, 3)), Err(Error::Height(_))));
        assert!(matches!(decompose(&g, &GeneratorTarget::entry(p(1, 2), p(1, 3), 2, 2)), Err(Error::BadIndex(_))));
        assert!(matches!(decompose_entry_h1(&g, p(1, 2), p(3, 4), 2, 3), Err(Error::Height(_))));
        let bumped = g.fwd().with_entry(0, 5, r.one()).unwrap();
        let bumped_inv = g.fwd().with_entry(0, 5, r.from_i64(-1)).unwrap();
        let not_member = InvPair::new(bumped, bumped_inv).unwrap();
        assert!(matches!(Decomposer::new(&not_member), Err(Error::Membership)));
        let small = InvPair::identity(3, &r);
        assert!(matches!(Decomposer::new(&small), Err(Error::RankTooSmall(_))));
    }

    #[test]
    fn flipped_epsilon_is_caught() {
        let r = zmod();
        let mut rng = seeded(10);
        let g = random_wedge_pair(&mut rng, 4, 40, &r).unwrap();
        let t = GeneratorTarget::entry(Index2::new(1, 3, 4).unwrap(), Index2::new(2, 3, 4).unwrap(), 2, 3);
        let res = decompose(&g, &t).unwrap();
        let mut w = res.word.clone();
        w.flip_eps(3);
        assert!(!verify(&w, &g, 2, 3, &res.param).unwrap());
        let faulted = crate::fault::with_fault(crate::fault::Fault::Epsilon { term: 0 }, || decompose(&g, &t));
        assert!(matches!(faulted, Err(Error::StepViolated(_))));
        assert!(verify(&ConjWord::empty(4), &g, 1, 2, &r.zero()).unwrap());
    }

    #[test]
    fn short_generators_cover_the_level() {
        let r = zmod();
        let mut rng = seeded(12);
        for n in 4..=5 {
            let g = random_wedge_pair(&mut rng, n, 50, &r).unwrap();
            let d = Decomposer::new(&g).unwrap();
            let big_n = g.dim();
            assert_eq!(short_generators(n).len(), big_n * big_n - 1);
            for gen in level_generators(g.fwd()).unwrap() {
                let mut sum = r.zero();
                for (s, e) in d.express(&gen.kind).unwrap() {
                    sum = &sum + &signed(e, &d.short_value(&s).unwrap());
                }
                assert_eq!(sum, gen.value);
            }
        }
    }

    #[test]
    fn combined_level_word() {
        let r = zmod();
        let mut rng = seeded(13);
        let g = random_wedge_pair(&mut rng, 4, 40, &r).unwrap();
        let d = Decomposer::new(&g).unwrap();
        let gens = level_generators(g.fwd()).unwrap();
        let combo: Vec<_> = gens.iter().map(|l| (l.kind, r.from_i64(3))).collect();
        let lw = d.level_element(&combo, 3, 1).unwrap();
        assert!(lw.word.len() <= 8 * 35);
        let want = gens.iter().fold(r.zero(), |acc, l| &acc + &(&r.from_i64(3) * &l.value));
        assert_eq!(lw.param, want);
    }

    #[test]
    fn result_json_roundtrip() {
        let r = zmod();
        let mut rng = seeded(11);
        let g = random_wedge_pair(&mut rng, 4, 30, &r).unwrap();
        let t = GeneratorTarget::entry(Index2::new(1, 2, 4).unwrap(), Index2::new(3, 4, 4).unwrap(), 1, 3);
        let res = decompose(&g, &t).unwrap();
        assert_eq!(DecompositionResult::from_json(&res.to_json(), &r).unwrap(), res);
    }
}
