//! Auditing candidate Borcherds products on lattices `M = U + K`.
//!
//! A [`CandidateProduct`] is a Lorentzian even lattice `K` (so that `U + K`
//! has signature `(l, 2)`), a claimed weight, and a principal part: the
//! negative-exponent Fourier data `c(x, -n)` of the would-be input, indexed
//! by cosets `x` of `K'/K` and exponents `n > 0`.
//!
//! From this data the audit derives the divisor classes and multiplicities
//! the product would have, then runs the necessary conditions for a
//! holomorphic singular-weight product: simple zeros, integral reflections
//! for every divisor class, divisibility of every exponent into the norm
//! ideal generator `m_K`, and the rank-based existence verdict.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{DualQuotient, GramLattice, LatticeVector};
use crate::rational::{rat_int, Int, Rat};

/// One principal-part entry `c(x, -n)`: a canonical coset representative
/// `x` in `K'`, an exponent `n > 0`, and a nonzero integer coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalEntry {
    pub coset: LatticeVector,
    pub n: Rat,
    pub c: Int,
}

/// Validated principal part: canonical coset keys, no duplicate `(x, n)`
/// pairs, symmetric under `x -> -x`, and every exponent consistent with the
/// discriminant-form grading (`n - (x, x)/2` integral).
#[derive(Clone, Debug)]
pub struct PrincipalPart {
    entries: Vec<PrincipalEntry>,
}

impl PrincipalPart {
    pub fn entries(&self) -> &[PrincipalEntry] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A candidate product on `M = U + K`, audited against the necessary
/// conditions for holomorphic singular-weight products.
#[derive(Clone, Debug)]
pub struct CandidateProduct {
    k: GramLattice,
    m: GramLattice,
    quot: DualQuotient,
    weight: Rat,
    principal: PrincipalPart,
    constant_term: Option<Int>,
}

/// A divisor class `(y, m)` of a candidate: coset `y` of `K'/K`, positive
/// norm parameter `m` (the class consists of divisors `lambda^perp` with
/// `lambda` primitive of norm `2m` in coset `y`), a representative vector in
/// `M' = (U + K)'` coordinates, and the derived integer multiplicity.
#[derive(Clone, Debug)]
pub struct DivisorClass {
    pub coset: LatticeVector,
    pub m: Rat,
    pub representative: LatticeVector,
    pub multiplicity: Int,
}

/// Per-entry divisibility data for the norm-ideal condition.
#[derive(Clone, Debug)]
pub struct MkEntry {
    pub coset: LatticeVector,
    pub n: Rat,
    pub c: Int,
    /// The quotient `m_K / n`.
    pub quotient: Rat,
    pub pass: bool,
}

/// Result of the norm-ideal divisibility check `m_K / n` integral.
#[derive(Clone, Debug)]
pub struct MkVerdict {
    pub m_k: Int,
    pub entries: Vec<MkEntry>,
    pub overall: bool,
}

/// Existence verdict for special modular forms of singular weight on a
/// signature `(l, 2)` lattice, by rank alone.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankVerdict {
    /// No such form exists at this rank.
    NoneExists,
    /// Exactly one form exists up to scalar (the rank-26 case).
    OnlyPhi12,
    /// Examples are known at this rank.
    Exists,
    /// Existence is open at this rank.
    Unknown,
}

impl std::fmt::Display for RankVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RankVerdict::NoneExists => "NONE_EXISTS",
            RankVerdict::OnlyPhi12 => "ONLY_PHI12",
            RankVerdict::Exists => "EXISTS",
            RankVerdict::Unknown => "UNKNOWN",
        };
        f.write_str(s)
    }
}

/// Cross-check of the claimed weight against a supplied constant term
/// `c(0, 0)` (the lift gives weight `c(0, 0)/2`); advisory only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightCrossCheck {
    /// No constant term supplied.
    Unchecked,
    Consistent,
    Mismatch { implied: Rat },
}

/// Full audit output; `overall` is the composite verdict.
#[derive(Clone, Debug)]
pub struct AuditReport {
    pub rank: usize,
    pub signature: (usize, usize),
    pub l: usize,
    pub weight: Rat,
    pub singular_weight: Rat,
    pub claims_singular_weight: bool,
    pub weight_cross_check: WeightCrossCheck,
    pub divisor: Vec<DivisorClass>,
    /// Per-class integral-reflection verdicts, parallel to `divisor`.
    pub class_reflective: Vec<bool>,
    pub holomorphic: bool,
    pub simple_zeros: bool,
    pub reflective: bool,
    pub mk: MkVerdict,
    pub rank_verdict: RankVerdict,
    pub overall: bool,
}

/// The singular weight `l/2 - 1` on a signature `(l, 2)` lattice, `l >= 3`.
pub fn singular_weight(l: usize) -> Result<Rat> {
    if l < 3 {
        return Err(Error::input(format!("singular weight needs l >= 3, got {l}")));
    }
    Ok(Rat::new(Int::from(l as i64 - 2), Int::from(2)))
}

/// Existence verdict for special singular-weight forms on `O(l, 2)`:
/// none for `l >= 21` except the unique rank-26 form; known examples at
/// `l = 3, 4, 6, 8, 10, 12, 14, 18`; open otherwise.
pub fn rank_verdict(l: usize) -> Result<RankVerdict> {
    if l < 3 {
        return Err(Error::input(format!("rank verdict needs l >= 3, got {l}")));
    }
    Ok(match l {
        26 => RankVerdict::OnlyPhi12,
        _ if l >= 21 => RankVerdict::NoneExists,
        3 | 4 | 6 | 8 | 10 | 12 | 14 | 18 => RankVerdict::Exists,
        _ => RankVerdict::Unknown,
    })
}

/// Decide whether positive integers `a, d` exist with `s a = w d` and
/// `m_max d <= a`; returns the minimal witness `(a, d)` when they do.
///
/// Writing `w/s = p/q` in lowest terms, every solution is
/// `(a, d) = (p k, q k)`, so feasibility reduces to `m_max q <= p`.
pub fn bookkeeping_feasible(s: &Rat, w: &Rat, m_max: u64) -> Result<Option<(Int, Int)>> {
    if !s.is_positive() || !w.is_positive() {
        return Err(Error::input("weight parameters must be positive"));
    }
    if m_max == 0 {
        return Err(Error::input("multiplicity bound must be positive"));
    }
    let ratio = w / s;
    let (p, q) = (ratio.numer().clone(), ratio.denom().clone());
    if Int::from(m_max) * &q <= p {
        Ok(Some((p, q)))
    } else {
        Ok(None)
    }
}

/// Representative `v_r = (1, m - r^2/2, r)` in `(U + K)'` coordinates of the
/// divisor class with lift `r` and norm parameter `m`; its norm is `2m`.
///
/// Requires `m - r^2/2` integral (the coset-consistency of the exponent) so
/// that the representative lies in the dual of `U + K`.
pub fn divisor_representative(k: &GramLattice, lift: &LatticeVector, m: &Rat) -> Result<LatticeVector> {
    let r_norm = k.norm(lift)?;
    let b = m - &r_norm / &rat_int(2);
    if !b.denom().is_one() {
        return Err(Error::input(format!(
            "no vector of norm 2*{m} exists in this coset: {m} - r^2/2 is not integral"
        )));
    }
    let mut coords = vec![Rat::one(), b];
    coords.extend_from_slice(lift.coords());
    Ok(LatticeVector::new(coords))
}

impl CandidateProduct {
    /// Validate and canonicalize a candidate.
    ///
    /// `K` must be even and Lorentzian of rank at least 3 (so `U + K` has
    /// signature `(l, 2)` with `l >= 3`). Raw principal entries may use any
    /// dual-vector lifts; cosets are reduced to canonical representatives.
    pub fn new(
        k: GramLattice,
        weight: Rat,
        raw_entries: Vec<(LatticeVector, Rat, Int)>,
        constant_term: Option<Int>,
    ) -> Result<Self> {
        if !k.is_even() {
            return Err(Error::input("candidate requires an even lattice K"));
        }
        let rank_k = k.rank();
        if rank_k < 3 || k.signature() != (rank_k - 1, 1) {
            return Err(Error::input(format!(
                "K must be Lorentzian of rank >= 3 so that U + K has signature (l, 2) with l >= 3; \
                 got rank {rank_k} and signature {:?}",
                k.signature()
            )));
        }
        if weight.is_negative() {
            return Err(Error::input("weight must be nonnegative"));
        }
        let u = GramLattice::new(vec![vec![0, 1], vec![1, 0]]).expect("hyperbolic plane");
        let m = u.direct_sum(&k);
        let quot = k.dual_quotient();

        let mut entries: Vec<PrincipalEntry> = Vec::with_capacity(raw_entries.len());
        let mut seen: BTreeMap<(LatticeVector, Rat), Int> = BTreeMap::new();
        for (x, n, c) in raw_entries {
            if !n.is_positive() {
                return Err(Error::input(format!(
                    "principal part exponent must be positive, got {n}"
                )));
            }
            if c.is_zero() {
                return Err(Error::input("principal part coefficient must be nonzero"));
            }
            if !k.is_in_dual(&x)? {
                return Err(Error::input("principal part coset does not lie in the dual of K"));
            }
            let coset = quot.reduce(&x)?;
            // n must be congruent to (x, x)/2 mod 1, else no vector of the
            // coset has norm 2n and the entry is meaningless
            let half_norm = k.norm(&coset)? / rat_int(2);
            if !(&n - &half_norm).denom().is_one() {
                return Err(Error::input(format!(
                    "exponent {n} is inconsistent with the coset norm: n - (x, x)/2 must be integral"
                )));
            }
            if seen.insert((coset.clone(), n.clone()), c.clone()).is_some() {
                return Err(Error::input("duplicate (coset, exponent) in principal part"));
            }
            entries.push(PrincipalEntry { coset, n, c });
        }
        // symmetry c(x, -n) = c(-x, -n)
        for e in &entries {
            let minus = quot.reduce(&e.coset.neg())?;
            match seen.get(&(minus, e.n.clone())) {
                Some(c) if *c == e.c => {}
                _ => {
                    return Err(Error::input(
                        "principal part must be symmetric: entry for -x missing or mismatched",
                    ))
                }
            }
        }
        entries.sort_by(|a, b| (&a.coset, &a.n).cmp(&(&b.coset, &b.n)));

        Ok(CandidateProduct {
            k,
            m,
            quot,
            weight,
            principal: PrincipalPart { entries },
            constant_term,
        })
    }

    pub fn k_lattice(&self) -> &GramLattice {
        &self.k
    }

    /// The full lattice `M = U + K`.
    pub fn m_lattice(&self) -> &GramLattice {
        &self.m
    }

    pub fn weight(&self) -> &Rat {
        &self.weight
    }

    pub fn principal_part(&self) -> &PrincipalPart {
        &self.principal
    }

    pub fn constant_term(&self) -> Option<&Int> {
        self.constant_term.as_ref()
    }

    /// `l` in the signature `(l, 2)` of `U + K`.
    pub fn l(&self) -> usize {
        self.k.rank()
    }

    /// Divisor classes derived from the principal part. For each entry pair
    /// `(y, m)`, the multiplicity of the class of primitive vectors is the
    /// sum `sum_{d >= 1} c(d y, -d^2 m)` over entries present; classes with
    /// multiplicity zero are omitted. Sorted by `(m, coset)`.
    pub fn divisor_classes(&self) -> Result<Vec<DivisorClass>> {
        let lookup: BTreeMap<(LatticeVector, Rat), Int> = self
            .principal
            .entries
            .iter()
            .map(|e| ((e.coset.clone(), e.n.clone()), e.c.clone()))
            .collect();
        let n_max = match self.principal.entries.iter().map(|e| &e.n).max() {
            Some(n) => n.clone(),
            None => return Ok(Vec::new()),
        };
        let mut classes = Vec::new();
        for e in &self.principal.entries {
            let mut multiplicity = Int::zero();
            let mut d = Int::one();
            loop {
                let d_rat = Rat::from_integer(d.clone());
                let n_d = &d_rat * &d_rat * &e.n;
                if n_d > n_max {
                    break;
                }
                let y_d = self.quot.reduce(&e.coset.scale(&d_rat))?;
                if let Some(c) = lookup.get(&(y_d, n_d)) {
                    multiplicity += c;
                }
                d += 1u32;
            }
            if multiplicity.is_zero() {
                continue;
            }
            let representative = divisor_representative(&self.k, &e.coset, &e.n)?;
            debug_assert_eq!(self.m.norm(&representative)?, &rat_int(2) * &e.n);
            classes.push(DivisorClass {
                coset: e.coset.clone(),
                m: e.n.clone(),
                representative,
                multiplicity,
            });
        }
        classes.sort_by(|a, b| (&a.m, &a.coset).cmp(&(&b.m, &b.coset)));
        Ok(classes)
    }

    /// Norm-ideal divisibility: `m_K / n` must be an integer for every
    /// entry with nonzero coefficient.
    pub fn check_mk(&self) -> Result<MkVerdict> {
        let m_k = self.k.norm_ideal_generator()?;
        let m_k_rat = Rat::from_integer(m_k.clone());
        let entries: Vec<MkEntry> = self
            .principal
            .entries
            .iter()
            .map(|e| {
                let quotient = &m_k_rat / &e.n;
                let pass = quotient.denom().is_one();
                MkEntry {
                    coset: e.coset.clone(),
                    n: e.n.clone(),
                    c: e.c.clone(),
                    quotient,
                    pass,
                }
            })
            .collect();
        let overall = entries.iter().all(|e| e.pass);
        Ok(MkVerdict { m_k, entries, overall })
    }

    /// True iff every divisor class has multiplicity exactly one.
    pub fn check_simple_zeros(&self) -> Result<bool> {
        Ok(self.divisor_classes()?.iter().all(|c| c.multiplicity.is_one()))
    }

    /// True iff the reflection in every divisor-class representative is an
    /// integral isometry of `U + K`. One representative decides each class:
    /// representatives of the same class lie in a single orbit under the
    /// discriminant kernel, and conjugate reflections are integral together.
    pub fn check_reflective(&self) -> Result<bool> {
        for class in self.divisor_classes()? {
            if !self.m.is_integral_reflection(&class.representative)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// True iff the claimed weight is the singular weight `l/2 - 1` (and
    /// positive, excluding constants).
    pub fn check_singular(&self) -> Result<bool> {
        Ok(self.weight == singular_weight(self.l())? && self.weight.is_positive())
    }

    /// Run every check and compose the overall verdict.
    ///
    /// A candidate claiming singular weight must be holomorphic (no negative
    /// multiplicities) and pass simple zeros, reflectivity, the norm-ideal
    /// condition, and must not contradict the rank verdict. A candidate of
    /// non-singular weight is only held to holomorphy; the remaining fields
    /// are reported for information.
    pub fn audit(&self) -> Result<AuditReport> {
        let l = self.l();
        let signature = self.m.signature();
        debug_assert_eq!(signature, (l, 2));
        let singular_weight = singular_weight(l)?;
        let claims = self.check_singular()?;
        let divisor = self.divisor_classes()?;
        let class_reflective = divisor
            .iter()
            .map(|c| self.m.is_integral_reflection(&c.representative))
            .collect::<Result<Vec<_>>>()?;
        let holomorphic = divisor.iter().all(|c| !c.multiplicity.is_negative());
        let simple_zeros = divisor.iter().all(|c| c.multiplicity.is_one());
        let reflective = class_reflective.iter().all(|&b| b);
        let mk = self.check_mk()?;
        let verdict = rank_verdict(l)?;
        let weight_cross_check = match &self.constant_term {
            None => WeightCrossCheck::Unchecked,
            Some(c00) => {
                let implied = Rat::new(c00.clone(), Int::from(2));
                if implied == self.weight {
                    WeightCrossCheck::Consistent
                } else {
                    WeightCrossCheck::Mismatch { implied }
                }
            }
        };
        let overall = holomorphic
            && (!claims
                || (simple_zeros
                    && reflective
                    && mk.overall
                    && verdict != RankVerdict::NoneExists));
        Ok(AuditReport {
            rank: self.m.rank(),
            signature,
            l,
            weight: self.weight.clone(),
            singular_weight,
            claims_singular_weight: claims,
            weight_cross_check,
            divisor,
            class_reflective,
            holomorphic,
            simple_zeros,
            reflective,
            mk,
            rank_verdict: verdict,
            overall,
        })
    }
}
