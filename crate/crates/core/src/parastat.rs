//! Parafermion, paraboson and Palev generators and their triple relations.
//!
//! Signs `ξ, η, ε` are the integers ±1. Every relation family enumerates its
//! admissible index tuples and all sign tuples explicitly, evaluates both
//! sides as exact matrices, and records one instance per (index, sign) tuple.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebras::{is_member, AlgebraError, AlgebraSpec, Family};
use crate::gmatrix::{GradedMatrix, MatrixError};
use crate::grading::{Degree, Signature};
use crate::report::{CheckReport, Counterexample};
use crate::scalars::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParastatError {
    #[error("{0} needs at least one generator pair")]
    Empty(GeneratorKind),
    #[error("{family} requires {needed} generators")]
    KindMismatch { family: RelationFamily, needed: &'static str },
    #[error("{0} is not an osp(2m1+1,2m2|2n1,2n2) spec")]
    NotOspB(AlgebraSpec),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorKind {
    Parafermion,
    Paraboson,
    Palev,
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::Parafermion => "parafermion",
            GeneratorKind::Paraboson => "paraboson",
            GeneratorKind::Palev => "palev",
        })
    }
}

/// Creation/annihilation pairs `x_i^±`, split into two families at `family_split`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub spec: AlgebraSpec,
    pub kind: GeneratorKind,
    pub creators: Vec<GradedMatrix>,
    pub annihilators: Vec<GradedMatrix>,
    /// Generators `0..family_split` form family one, the rest family two.
    pub family_split: usize,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.creators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.creators.is_empty()
    }

    /// `x_i^ξ` for `ξ = ±1` (0-based `i`).
    pub fn op(&self, i: usize, sign: i8) -> &GradedMatrix {
        if sign > 0 {
            &self.creators[i]
        } else {
            &self.annihilators[i]
        }
    }

    pub fn family_one(&self) -> std::ops::Range<usize> {
        0..self.family_split
    }

    pub fn family_two(&self) -> std::ops::Range<usize> {
        self.family_split..self.len()
    }

    pub fn all(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// Expected degree of generator `i` from its family.
    pub fn family_degree(&self, i: usize) -> Degree {
        let first = i < self.family_split;
        match (self.kind, first) {
            (GeneratorKind::Parafermion, true) => Degree::ZERO,
            (GeneratorKind::Parafermion, false) => Degree::BOTH,
            (_, true) => Degree::FIRST,
            (_, false) => Degree::SECOND,
        }
    }

    fn symbol(&self) -> &'static str {
        match self.kind {
            GeneratorKind::Parafermion => "f",
            GeneratorKind::Paraboson => "b",
            GeneratorKind::Palev => "a",
        }
    }

    /// `(label, matrix)` for every generator, creators first.
    pub fn labeled(&self) -> Vec<(String, &GradedMatrix)> {
        let sym = self.symbol();
        let mut out = Vec::with_capacity(2 * self.len());
        for i in self.all() {
            out.push((format!("{sym}{}+", i + 1), &self.creators[i]));
        }
        for i in self.all() {
            out.push((format!("{sym}{}-", i + 1), &self.annihilators[i]));
        }
        out
    }
}

fn require_osp_b(spec: &AlgebraSpec) -> Result<(), ParastatError> {
    if spec.family == Family::OspB {
        Ok(())
    } else {
        Err(ParastatError::NotOspB(*spec))
    }
}

fn sqrt2_combo(sig: &Arc<Signature>, plus: (usize, usize), other: (usize, usize), other_sign: i64) -> Result<GradedMatrix, MatrixError> {
    GradedMatrix::from_triples(
        sig.clone(),
        [(plus.0, plus.1, Scalar::sqrt2()), (other.0, other.1, &Scalar::sqrt2() * &Scalar::from_int(other_sign))],
    )
}

/// `f_i^+ = √2(e_{0,i} − e_{m+i,0})`, `f_i^− = √2(e_{i,0} − e_{0,m+i})` with
/// `0` the middle index, `i = 1..m1+m2`.
pub fn parafermion_ops(spec: &AlgebraSpec) -> Result<GeneratorSet, ParastatError> {
    require_osp_b(spec)?;
    let m = spec.m();
    if m == 0 {
        return Err(ParastatError::Empty(GeneratorKind::Parafermion));
    }
    let sig = Arc::new(spec.signature());
    let mid = 2 * m;
    let mut creators = Vec::with_capacity(m);
    let mut annihilators = Vec::with_capacity(m);
    for i in 0..m {
        creators.push(sqrt2_combo(&sig, (mid, i), (m + i, mid), -1)?);
        annihilators.push(sqrt2_combo(&sig, (i, mid), (mid, m + i), -1)?);
    }
    Ok(GeneratorSet { spec: *spec, kind: GeneratorKind::Parafermion, creators, annihilators, family_split: spec.m1 })
}

/// `b_i^+ = √2(e_{0,p+n+i} + e_{p+i,0})`, `b_i^− = √2(e_{0,p+i} − e_{p+n+i,0})`
/// with `0` the middle index and `p` the first symplectic index.
pub fn paraboson_ops(spec: &AlgebraSpec) -> Result<GeneratorSet, ParastatError> {
    require_osp_b(spec)?;
    let n = spec.n();
    if n == 0 {
        return Err(ParastatError::Empty(GeneratorKind::Paraboson));
    }
    let sig = Arc::new(spec.signature());
    let mid = 2 * spec.m();
    let p = mid + 1;
    let mut creators = Vec::with_capacity(n);
    let mut annihilators = Vec::with_capacity(n);
    for i in 0..n {
        creators.push(sqrt2_combo(&sig, (mid, p + n + i), (p + i, mid), 1)?);
        annihilators.push(sqrt2_combo(&sig, (mid, p + i), (p + n + i, mid), -1)?);
    }
    Ok(GeneratorSet { spec: *spec, kind: GeneratorKind::Paraboson, creators, annihilators, family_split: spec.n1 })
}

/// `a_i^+ = e_{i+1,1}`, `a_i^− = e_{1,i+1}` in sl(1,0|n1,n2).
pub fn palev_ops(n1: usize, n2: usize) -> Result<GeneratorSet, ParastatError> {
    if n1 + n2 == 0 {
        return Err(ParastatError::Empty(GeneratorKind::Palev));
    }
    let spec = AlgebraSpec::sl(1, 0, n1, n2)?;
    let sig = Arc::new(spec.signature());
    let n = n1 + n2;
    let mut creators = Vec::with_capacity(n);
    let mut annihilators = Vec::with_capacity(n);
    for i in 0..n {
        creators.push(GradedMatrix::elem(sig.clone(), i + 1, 0)?);
        annihilators.push(GradedMatrix::elem(sig.clone(), 0, i + 1)?);
    }
    Ok(GeneratorSet { spec, kind: GeneratorKind::Palev, creators, annihilators, family_split: n1 })
}

/// The generator sets available for one algebra.
#[derive(Debug, Clone, Default)]
pub struct OperatorSystem {
    pub fermions: Option<GeneratorSet>,
    pub bosons: Option<GeneratorSet>,
    pub palev: Option<GeneratorSet>,
}

impl OperatorSystem {
    /// Parafermions and parabosons of a type-B spec (either may be absent).
    pub fn for_osp_b(spec: &AlgebraSpec) -> Result<Self, ParastatError> {
        require_osp_b(spec)?;
        Ok(OperatorSystem {
            fermions: (spec.m() > 0).then(|| parafermion_ops(spec)).transpose()?,
            bosons: (spec.n() > 0).then(|| paraboson_ops(spec)).transpose()?,
            palev: None,
        })
    }

    pub fn for_palev(n1: usize, n2: usize) -> Result<Self, ParastatError> {
        Ok(OperatorSystem { palev: Some(palev_ops(n1, n2)?), ..Default::default() })
    }

    pub fn sets(&self) -> impl Iterator<Item = &GeneratorSet> {
        self.fermions.iter().chain(&self.bosons).chain(&self.palev)
    }

    /// Relation families that apply to the generators present.
    pub fn applicable_families(&self) -> Vec<RelationFamily> {
        let mut out = Vec::new();
        if self.fermions.is_some() {
            out.push(RelationFamily::FF);
        }
        if self.bosons.is_some() {
            out.extend([RelationFamily::BBSame, RelationFamily::BBMixed]);
        }
        if let (Some(f), Some(_)) = (&self.fermions, &self.bosons) {
            if !f.family_one().is_empty() {
                out.push(RelationFamily::PFFamily1);
            }
            if !f.family_two().is_empty() {
                out.push(RelationFamily::PFFamily2);
            }
        }
        if self.palev.is_some() {
            out.extend([RelationFamily::ASame, RelationFamily::AMixed]);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RelationFamily {
    #[serde(rename = "FF")]
    FF,
    #[serde(rename = "BB_same")]
    BBSame,
    #[serde(rename = "BB_mixed")]
    BBMixed,
    #[serde(rename = "PF_family1")]
    PFFamily1,
    #[serde(rename = "PF_family2")]
    PFFamily2,
    #[serde(rename = "A_same")]
    ASame,
    #[serde(rename = "A_mixed")]
    AMixed,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 7] = [
        RelationFamily::FF,
        RelationFamily::BBSame,
        RelationFamily::BBMixed,
        RelationFamily::PFFamily1,
        RelationFamily::PFFamily2,
        RelationFamily::ASame,
        RelationFamily::AMixed,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            RelationFamily::FF => "FF",
            RelationFamily::BBSame => "BB_same",
            RelationFamily::BBMixed => "BB_mixed",
            RelationFamily::PFFamily1 => "PF_family1",
            RelationFamily::PFFamily2 => "PF_family2",
            RelationFamily::ASame => "A_same",
            RelationFamily::AMixed => "A_mixed",
        }
    }

    /// Sign-complete instance count for the given family sizes:
    /// `(m1, m2)` parafermions and `(n1, n2)` parabosons or Palev generators.
    pub fn declared_total(self, m1: usize, m2: usize, n1: usize, n2: usize) -> u64 {
        let (m1, m2, n1, n2) = (m1 as u64, m2 as u64, n1 as u64, n2 as u64);
        let (m, n) = (m1 + m2, n1 + n2);
        match self {
            RelationFamily::FF => m.pow(3) * 8,
            RelationFamily::BBSame => (n1.pow(3) + n2.pow(3)) * 8,
            RelationFamily::BBMixed => 2 * n1 * n2 * n * 8,
            RelationFamily::PFFamily1 => (2 * m1 * m1 * n + 2 * m1 * n * n) * 8,
            RelationFamily::PFFamily2 => (2 * m2 * m2 * n + 2 * m2 * n * n) * 8,
            RelationFamily::ASame => (n1 * n1 + n2 * n2) * 2 + (n1.pow(3) + n2.pow(3)) * 2,
            RelationFamily::AMixed => 2 * n1 * n2 * 2 + 2 * n1 * n2 * n * 2,
        }
    }

    fn check_name(self) -> String {
        format!("relations:{}", self.tag())
    }
}

impl fmt::Display for RelationFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

const SIGNS: [i8; 2] = [1, -1];

fn sign_tuples(arity: usize) -> Vec<Vec<i8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..arity {
        out = out.into_iter().flat_map(|t| SIGNS.iter().map(move |&s| [t.clone(), vec![s]].concat())).collect();
    }
    out
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// Which plain bracket to apply.
#[derive(Clone, Copy)]
enum Br {
    Comm,
    Anti,
}

fn apply(br: Br, x: &GradedMatrix, y: &GradedMatrix) -> GradedMatrix {
    match br {
        Br::Comm => x.commutator(y),
        Br::Anti => x.anticommutator(y),
    }
    .expect("generators share a signature")
}

/// One identity instance: `outer(inner(x, y), z) = Σ coeff·term`.
struct Instance<'a> {
    relation: &'static str,
    indices: Vec<usize>,
    signs: Vec<i8>,
    lhs: Lhs<'a>,
    rhs: Vec<(i64, &'a GradedMatrix)>,
}

enum Lhs<'a> {
    Triple { inner: Br, outer: Br, x: &'a GradedMatrix, y: &'a GradedMatrix, z: &'a GradedMatrix },
    Double { br: Br, x: &'a GradedMatrix, y: &'a GradedMatrix },
}

impl Instance<'_> {
    fn evaluate(&self) -> Option<Counterexample> {
        let lhs = match &self.lhs {
            Lhs::Triple { inner, outer, x, y, z } => apply(*outer, &apply(*inner, x, y), z),
            Lhs::Double { br, x, y } => apply(*br, x, y),
        };
        let mut residual = lhs;
        for (c, m) in &self.rhs {
            if *c != 0 {
                residual = residual.add_scaled(m, &Scalar::from_int(-c)).expect("generators share a signature");
            }
        }
        (!residual.is_zero()).then(|| Counterexample {
            indices: self.indices.iter().map(|i| i + 1).collect(),
            signs: Some(self.signs.clone()),
            relation: Some(self.relation.to_string()),
            residual,
        })
    }
}

type Range = std::ops::Range<usize>;

fn triples(first: Range, second: Range, third: Range) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for j in first {
        for k in second.clone() {
            for l in third.clone() {
                out.push((j, k, l));
            }
        }
    }
    out
}

fn pairs(first: Range, second: Range) -> Vec<(usize, usize)> {
    first.flat_map(|j| second.clone().map(move |k| (j, k))).collect()
}

fn need<'a>(set: &'a Option<GeneratorSet>, family: RelationFamily, needed: &'static str) -> Result<&'a GeneratorSet, ParastatError> {
    set.as_ref().ok_or(ParastatError::KindMismatch { family, needed })
}

fn instances<'a>(family: RelationFamily, system: &'a OperatorSystem) -> Result<Vec<Instance<'a>>, ParastatError> {
    let mut out = Vec::new();
    let s3 = sign_tuples(3);
    match family {
        RelationFamily::FF => {
            let f = need(&system.fermions, family, "parafermion")?;
            // [[f_j^ξ, f_k^η], f_l^ε] = |ε−η| δ_kl f_j^ξ − |ε−ξ| δ_jl f_k^η
            for (j, k, l) in triples(f.all(), f.all(), f.all()) {
                for s in &s3 {
                    let (xi, eta, eps) = (s[0] as i64, s[1] as i64, s[2] as i64);
                    out.push(Instance {
                        relation: "[[f,f],f]",
                        indices: vec![j, k, l],
                        signs: s.clone(),
                        lhs: Lhs::Triple { inner: Br::Comm, outer: Br::Comm, x: f.op(j, s[0]), y: f.op(k, s[1]), z: f.op(l, s[2]) },
                        rhs: vec![
                            ((eps - eta).abs() * delta(k, l), f.op(j, s[0])),
                            (-(eps - xi).abs() * delta(j, l), f.op(k, s[1])),
                        ],
                    });
                }
            }
        }
        RelationFamily::BBSame | RelationFamily::BBMixed => {
            let b = need(&system.bosons, family, "paraboson")?;
            let index_sets = if family == RelationFamily::BBSame {
                [triples(b.family_one(), b.family_one(), b.family_one()), triples(b.family_two(), b.family_two(), b.family_two())]
            } else {
                [triples(b.family_one(), b.family_two(), b.all()), triples(b.family_two(), b.family_one(), b.all())]
            };
            for (j, k, l) in index_sets.into_iter().flatten() {
                for s in &s3 {
                    let (xi, eta, eps) = (s[0] as i64, s[1] as i64, s[2] as i64);
                    let (x, y, z) = (b.op(j, s[0]), b.op(k, s[1]), b.op(l, s[2]));
                    out.push(if family == RelationFamily::BBSame {
                        // [{b_j^ξ, b_k^η}, b_l^ε] = (ε−ξ) δ_jl b_k^η + (ε−η) δ_kl b_j^ξ
                        Instance {
                            relation: "[{b,b},b]",
                            indices: vec![j, k, l],
                            signs: s.clone(),
                            lhs: Lhs::Triple { inner: Br::Anti, outer: Br::Comm, x, y, z },
                            rhs: vec![((eps - xi) * delta(j, l), y), ((eps - eta) * delta(k, l), x)],
                        }
                    } else {
                        // {[b_j^ξ, b_k^η], b_l^ε} = −(ε−ξ) δ_jl b_k^η + (ε−η) δ_kl b_j^ξ
                        Instance {
                            relation: "{[b,b],b}",
                            indices: vec![j, k, l],
                            signs: s.clone(),
                            lhs: Lhs::Triple { inner: Br::Comm, outer: Br::Anti, x, y, z },
                            rhs: vec![(-(eps - xi) * delta(j, l), y), ((eps - eta) * delta(k, l), x)],
                        }
                    });
                }
            }
        }
        RelationFamily::PFFamily1 | RelationFamily::PFFamily2 => {
            let f = need(&system.fermions, family, "parafermion and paraboson")?;
            let b = need(&system.bosons, family, "parafermion and paraboson")?;
            let first = family == RelationFamily::PFFamily1;
            let fr = if first { f.family_one() } else { f.family_two() };
            // [[f_j^ξ, f_k^η], b_l^ε] = 0
            for (j, k, l) in triples(fr.clone(), fr.clone(), b.all()) {
                for s in &s3 {
                    out.push(Instance {
                        relation: "[[f,f],b]",
                        indices: vec![j, k, l],
                        signs: s.clone(),
                        lhs: Lhs::Triple { inner: Br::Comm, outer: Br::Comm, x: f.op(j, s[0]), y: f.op(k, s[1]), z: b.op(l, s[2]) },
                        rhs: vec![],
                    });
                }
            }
            // [{b_j^ξ, b_k^η}, f_l^ε] = 0
            for (j, k, l) in triples(b.all(), b.all(), fr.clone()) {
                for s in &s3 {
                    out.push(Instance {
                        relation: "[{b,b},f]",
                        indices: vec![j, k, l],
                        signs: s.clone(),
                        lhs: Lhs::Triple { inner: Br::Anti, outer: Br::Comm, x: b.op(j, s[0]), y: b.op(k, s[1]), z: f.op(l, s[2]) },
                        rhs: vec![],
                    });
                }
            }
            // family one: [[f_j^ξ, b_k^η], f_l^ε] = −|ε−ξ| δ_jl b_k^η
            // family two: {{f_j^ξ, b_k^η}, f_l^ε} = |ε−ξ| δ_jl b_k^η
            for (j, k, l) in triples(fr.clone(), b.all(), fr.clone()) {
                for s in &s3 {
                    let (xi, eps) = (s[0] as i64, s[2] as i64);
                    let (x, y, z) = (f.op(j, s[0]), b.op(k, s[1]), f.op(l, s[2]));
                    let c = (eps - xi).abs() * delta(j, l);
                    out.push(if first {
                        Instance {
                            relation: "[[f,b],f]",
                            indices: vec![j, k, l],
                            signs: s.clone(),
                            lhs: Lhs::Triple { inner: Br::Comm, outer: Br::Comm, x, y, z },
                            rhs: vec![(-c, y)],
                        }
                    } else {
                        Instance {
                            relation: "{{f,b},f}",
                            indices: vec![j, k, l],
                            signs: s.clone(),
                            lhs: Lhs::Triple { inner: Br::Anti, outer: Br::Anti, x, y, z },
                            rhs: vec![(c, y)],
                        }
                    });
                }
            }
            // family one: {[f_j^ξ, b_k^η], b_l^ε} = (ε−η) δ_kl f_j^ξ
            // family two: [{f_j^ξ, b_k^η}, b_l^ε] = (ε−η) δ_kl f_j^ξ
            for (j, k, l) in triples(fr.clone(), b.all(), b.all()) {
                for s in &s3 {
                    let (eta, eps) = (s[1] as i64, s[2] as i64);
                    let (x, y, z) = (f.op(j, s[0]), b.op(k, s[1]), b.op(l, s[2]));
                    let (inner, outer, relation) =
                        if first { (Br::Comm, Br::Anti, "{[f,b],b}") } else { (Br::Anti, Br::Comm, "[{f,b},b]") };
                    out.push(Instance {
                        relation,
                        indices: vec![j, k, l],
                        signs: s.clone(),
                        lhs: Lhs::Triple { inner, outer, x, y, z },
                        rhs: vec![((eps - eta) * delta(k, l), x)],
                    });
                }
            }
        }
        RelationFamily::ASame | RelationFamily::AMixed => {
            let a = need(&system.palev, family, "palev")?;
            let same = family == RelationFamily::ASame;
            let (pair_sets, triple_sets) = if same {
                (
                    [pairs(a.family_one(), a.family_one()), pairs(a.family_two(), a.family_two())],
                    [triples(a.family_one(), a.family_one(), a.family_one()), triples(a.family_two(), a.family_two(), a.family_two())],
                )
            } else {
                (
                    [pairs(a.family_one(), a.family_two()), pairs(a.family_two(), a.family_one())],
                    [triples(a.family_one(), a.family_two(), a.all()), triples(a.family_two(), a.family_one(), a.all())],
                )
            };
            // same family: {a_i^ξ, a_j^ξ} = 0; mixed: [a_i^ξ, a_j^ξ] = 0
            for (i, j) in pair_sets.into_iter().flatten() {
                for &xi in &SIGNS {
                    out.push(Instance {
                        relation: if same { "{a,a}" } else { "[a,a]" },
                        indices: vec![i, j],
                        signs: vec![xi],
                        lhs: Lhs::Double { br: if same { Br::Anti } else { Br::Comm }, x: a.op(i, xi), y: a.op(j, xi) },
                        rhs: vec![],
                    });
                }
            }
            for (i, j, k) in triple_sets.into_iter().flatten() {
                for &eps in &SIGNS {
                    let (x, y, z) = (a.op(i, 1), a.op(j, -1), a.op(k, eps));
                    let (inner, outer, relation, rhs) = match (same, eps > 0) {
                        // [{a_i^+, a_j^−}, a_k^+] = δ_jk a_i^+ − δ_ij a_k^+
                        (true, true) => (Br::Anti, Br::Comm, "[{a+,a-},a+]", vec![(delta(j, k), x), (-delta(i, j), z)]),
                        // [{a_i^+, a_j^−}, a_k^−] = −δ_ik a_j^− + δ_ij a_k^−
                        (true, false) => (Br::Anti, Br::Comm, "[{a+,a-},a-]", vec![(-delta(i, k), y), (delta(i, j), z)]),
                        // {[a_i^+, a_j^−], a_k^+} = δ_jk a_i^+
                        (false, true) => (Br::Comm, Br::Anti, "{[a+,a-],a+}", vec![(delta(j, k), x)]),
                        // {[a_i^+, a_j^−], a_k^−} = δ_ik a_j^−
                        (false, false) => (Br::Comm, Br::Anti, "{[a+,a-],a-}", vec![(delta(i, k), y)]),
                    };
                    out.push(Instance {
                        relation,
                        indices: vec![i, j, k],
                        signs: vec![eps],
                        lhs: Lhs::Triple { inner, outer, x, y, z },
                        rhs,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Family sizes `(m1, m2, n1, n2)` used for the declared instance count.
pub fn family_sizes(family: RelationFamily, system: &OperatorSystem) -> (usize, usize, usize, usize) {
    let split = |s: &Option<GeneratorSet>| s.as_ref().map_or((0, 0), |g| (g.family_split, g.len() - g.family_split));
    let (m1, m2) = split(&system.fermions);
    let (n1, n2) = match family {
        RelationFamily::ASame | RelationFamily::AMixed => split(&system.palev),
        _ => split(&system.bosons),
    };
    (m1, m2, n1, n2)
}

/// Exhaustively checks one relation family; instances are recorded in
/// (relation, index tuple, sign tuple) order.
pub fn verify_relations(family: RelationFamily, system: &OperatorSystem) -> Result<CheckReport, ParastatError> {
    let list = instances(family, system)?;
    let spec = match family {
        RelationFamily::ASame | RelationFamily::AMixed => system.palev.as_ref().map(|g| g.spec),
        RelationFamily::FF | RelationFamily::PFFamily1 | RelationFamily::PFFamily2 => system.fermions.as_ref().map(|g| g.spec),
        _ => system.bosons.as_ref().map(|g| g.spec),
    }
    .expect("instances() checked presence");
    let mut report = CheckReport::new(family.check_name(), spec);
    report.run(&list, Instance::evaluate);
    Ok(report)
}

/// For every ordered pair of generators in the system, the graded bracket
/// equals the anticommutator when `dot(deg x, deg y) = 1` and the commutator
/// otherwise.
pub fn graded_bracket_consistency(system: &OperatorSystem) -> Result<CheckReport, ParastatError> {
    let gens: Vec<&GradedMatrix> = system.sets().flat_map(|s| s.creators.iter().chain(&s.annihilators)).collect();
    let spec = system.sets().next().map(|s| s.spec).ok_or(ParastatError::Empty(GeneratorKind::Paraboson))?;
    let degs: Vec<Degree> = gens
        .iter()
        .map(|g| g.degree().ok_or(ParastatError::Matrix(MatrixError::NotHomogeneous)))
        .collect::<Result<_, _>>()?;
    let idx: Vec<(usize, usize)> = pairs(0..gens.len(), 0..gens.len());
    let mut report = CheckReport::new("bracket_consistency", spec);
    report.run(&idx, |&(a, b)| {
        let (x, y) = (gens[a], gens[b]);
        let plain = if degs[a].dot(degs[b]) == 1 { Br::Anti } else { Br::Comm };
        let residual = x.bracket(y).expect("same signature").sub(&apply(plain, x, y)).expect("same signature");
        (!residual.is_zero()).then(|| Counterexample { indices: vec![a + 1, b + 1], signs: None, relation: None, residual })
    });
    Ok(report)
}

/// Every generator has its family degree and, for osp generators, lies in
/// the ambient algebra.
pub fn verify_generators(system: &OperatorSystem) -> Result<CheckReport, ParastatError> {
    let spec = system.sets().next().map(|s| s.spec).ok_or(ParastatError::Empty(GeneratorKind::Paraboson))?;
    let mut report = CheckReport::new("generators", spec);
    for set in system.sets() {
        for i in set.all() {
            for sign in SIGNS {
                let g = set.op(i, sign);
                let degree_ok = g.degree() == Some(set.family_degree(i));
                let member = is_member(&set.spec, g)?;
                report.record((!(degree_ok && member)).then(|| Counterexample {
                    indices: vec![i + 1],
                    signs: Some(vec![sign]),
                    relation: Some(format!(
                        "{} generator: degree {}, member {}",
                        set.kind,
                        if degree_ok { "ok" } else { "wrong" },
                        member
                    )),
                    residual: g.clone(),
                }));
            }
        }
    }
    Ok(report)
}

/// Span of the generators together with all their graded brackets of length
/// two and three.
pub fn bracket_span(set: &GeneratorSet) -> Result<Vec<GradedMatrix>, ParastatError> {
    let gens: Vec<&GradedMatrix> = set.creators.iter().chain(&set.annihilators).collect();
    let mut out: Vec<GradedMatrix> = gens.iter().map(|g| (*g).clone()).collect();
    let mut doubles = Vec::new();
    for x in &gens {
        for y in &gens {
            doubles.push(x.bracket(y)?);
        }
    }
    for x in &gens {
        for d in &doubles {
            out.push(x.bracket(d)?);
        }
    }
    out.extend(doubles);
    Ok(out)
}
