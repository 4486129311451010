//! The pseudo-unitary group `WCl(p,q) = {U : U*U = e}` and its Lie algebra
//! `wCl(p,q) = {u : u* = -u}`, with `*` the Clifford conjugation.
//!
//! All tolerances are on the largest coefficient modulus.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{reversal_sign, Blade, Field, Multivector, Operation, Signature};
use crate::error::{Error, Result};
use crate::subspace::{catalog_entries, closure_check, wc_domain, CoefficientDomain, GradedSubspaceSpec, TheoremId};
use crate::types::{check_quaternion_split, SplitPart, SplitViolation};

pub const DEFAULT_TOL: f64 = 1e-9;
pub const DEFAULT_MAX_TERMS: usize = 200;

/// Largest `n` accepted by [`verify_theorem5_13`].
pub const SUBALGEBRA_MAX_N: usize = 10;
/// Exponentials are sampled only up to this dimension.
pub const EXP_SAMPLE_MAX_N: usize = 5;
const EXP_SAMPLES: usize = 16;
const EPSILON: f64 = 1e-6;

fn conj_residual(u: &Multivector) -> f64 {
    let u = u.to_complex();
    u.clifford_conjugate().plus(&u).map(|s| s.norm_inf()).unwrap_or(f64::INFINITY)
}

fn unitarity_residual(u: &Multivector) -> Result<f64> {
    let u = u.to_complex();
    let e = Multivector::identity(u.signature(), Field::Complex);
    Ok(u.clifford_conjugate().product(&u)?.minus(&e)?.norm_inf())
}

/// `|u* + u| <= tol`.
pub fn is_in_wc(u: &Multivector, tol: f64) -> bool {
    conj_residual(u) <= tol
}

/// `|U*U - e| <= tol`.
pub fn group_membership(u: &Multivector, tol: f64) -> bool {
    unitarity_residual(u).is_ok_and(|r| r <= tol)
}

/// Splits `u = Σ a_k u^k` with real `u^k` of rank `k`; index `k` of the
/// result is `u^k`.
pub fn wc_decompose(u: &Multivector, tol: f64) -> Result<Vec<Multivector>> {
    let residual = conj_residual(u);
    if residual > tol {
        return Err(Error::NotInLieAlgebra { residual });
    }
    let sig = u.signature();
    (0..=sig.n())
        .map(|k| {
            let imaginary = wc_domain(k) == CoefficientDomain::Imaginary;
            let terms = u
                .terms()
                .filter(|(b, _)| b.rank() == k)
                .map(|(b, c)| (b, Complex64::new(if imaginary { c.im } else { c.re }, 0.0)));
            Multivector::from_terms(sig, Field::Real, terms)
        })
        .collect()
}

/// `exp(u)` by Taylor series on `u / 2^s` followed by `s` squarings, where
/// `s` brings the l1 coefficient norm to at most 1/2. The series stops once
/// a term's l1 norm drops below `tol / 2^s`, which then also bounds the tail.
pub fn mv_exp(u: &Multivector, tol: f64, max_terms: usize) -> Result<Multivector> {
    let u = u.to_complex();
    let l1 = u.norm_l1();
    if !l1.is_finite() {
        return Err(Error::Convergence { max_terms });
    }
    let squarings = if l1 > 0.5 { (l1 / 0.5).log2().ceil() as i32 } else { 0 };
    let x = u.scale(0.5f64.powi(squarings));
    let inner_tol = tol * 0.5f64.powi(squarings);
    let mut sum = Multivector::identity(u.signature(), Field::Complex);
    let mut term = sum.clone();
    let mut m = 0;
    loop {
        m += 1;
        if m > max_terms {
            return Err(Error::Convergence { max_terms });
        }
        term = term.product(&x)?.scale(1.0 / m as f64);
        sum = sum.plus(&term)?;
        if term.norm_l1() < inner_tol {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.product(&sum)?;
    }
    Ok(sum)
}

/// An element of `wCl(p,q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraElement(Multivector);

impl LieAlgebraElement {
    pub fn new(u: Multivector, tol: f64) -> Result<Self> {
        let residual = conj_residual(&u);
        if residual > tol {
            return Err(Error::NotInLieAlgebra { residual });
        }
        Ok(Self(u.to_complex()))
    }

    pub fn value(&self) -> &Multivector {
        &self.0
    }

    pub fn exp(&self, tol: f64) -> Result<GroupElement> {
        let value = mv_exp(&self.0, tol * 1e-3, DEFAULT_MAX_TERMS)?;
        GroupElement::new(value, tol)
    }
}

/// An element of `WCl(p,q)`, together with the tolerance it was accepted at.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    value: Multivector,
    tol: f64,
}

impl GroupElement {
    pub fn new(value: Multivector, tol: f64) -> Result<Self> {
        let residual = unitarity_residual(&value)?;
        if residual > tol {
            return Err(Error::NotInGroup { residual });
        }
        Ok(Self { value: value.to_complex(), tol })
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }
}

/// Random element of `spec` with every coefficient modulus at most 1.
pub fn random_element<R: Rng>(spec: &GradedSubspaceSpec, sig: Signature, rng: &mut R) -> Result<Multivector> {
    let mut terms = Vec::new();
    for m in 0..1u32 << sig.n() {
        let blade = Blade(m);
        let x: f64 = rng.gen_range(-1.0..=1.0);
        let c = match spec.domain(blade.rank()) {
            CoefficientDomain::Absent => continue,
            CoefficientDomain::Real => Complex64::new(x, 0.0),
            CoefficientDomain::Imaginary => Complex64::new(0.0, x),
            CoefficientDomain::Full => {
                let y: f64 = rng.gen_range(-1.0..=1.0);
                Complex64::new(x, y) * std::f64::consts::FRAC_1_SQRT_2
            }
        };
        terms.push((blade, c));
    }
    Multivector::from_terms(sig, spec.field(), terms)
}

/// Largest coefficient component of `u` that `spec` does not admit.
pub fn distance_outside(spec: &GradedSubspaceSpec, u: &Multivector) -> f64 {
    u.terms()
        .map(|(b, c)| match spec.domain(b.rank()) {
            CoefficientDomain::Absent => c.norm(),
            CoefficientDomain::Real => c.im.abs(),
            CoefficientDomain::Imaginary => c.re.abs(),
            CoefficientDomain::Full => 0.0,
        })
        .fold(0.0, f64::max)
}

/// Blade-level check that `wCl` is of quaternion type under the commutator
/// with `E = Cl_2`, `I = Cl_3`, `J = i Cl_0`, `K = i Cl_1` (classes mod 4).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem4Report {
    pub n: usize,
    pub pairs_checked: usize,
    pub violations: Vec<SplitViolation>,
}

impl Theorem4Report {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub const WC_SPLIT: [SplitPart; 4] =
    [SplitPart::real(2), SplitPart::real(3), SplitPart::imaginary(0), SplitPart::imaginary(1)];

pub fn verify_theorem4(sig: Signature) -> Result<Theorem4Report> {
    let violations = check_quaternion_split(sig, Operation::Commutator, WC_SPLIT)?;
    Ok(Theorem4Report { n: sig.n(), pairs_checked: 1usize << (2 * sig.n()), violations })
}

/// Outcome for one Lie subalgebra.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubalgebraCheck {
    pub source: String,
    pub spec: GradedSubspaceSpec,
    pub in_wc: bool,
    pub closed: bool,
    /// Group subspace the exponentials must stay in, when one is known.
    pub group: Option<GradedSubspaceSpec>,
    pub exp_samples: usize,
    pub exp_failures: usize,
    pub epsilon_checks: usize,
    pub epsilon_failures: usize,
}

impl SubalgebraCheck {
    pub fn ok(&self) -> bool {
        self.in_wc && self.closed && self.exp_failures == 0 && self.epsilon_failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SubalgebraReport {
    pub n: usize,
    pub checks: Vec<SubalgebraCheck>,
}

impl SubalgebraReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(SubalgebraCheck::ok)
    }
}

fn pattern(n: usize, p: [CoefficientDomain; 4]) -> Result<GradedSubspaceSpec> {
    GradedSubspaceSpec::from_type_pattern(n, Field::Complex, p)
}

/// The four type-level Lie subalgebras of `wCl` and the groups they
/// exponentiate into.
fn theorem5_pairs(n: usize) -> Result<Vec<(&'static str, GradedSubspaceSpec, GradedSubspaceSpec)>> {
    use CoefficientDomain::{Absent as A, Full as C, Imaginary as I, Real as R};
    Ok(vec![
        ("2", pattern(n, [A, A, R, A])?, pattern(n, [R, A, R, A])?),
        ("2+i0", pattern(n, [I, A, R, A])?, pattern(n, [C, A, C, A])?),
        ("2+i1", pattern(n, [A, I, R, A])?, pattern(n, [R, I, R, I])?),
        ("23", pattern(n, [A, A, R, R])?, pattern(n, [R, R, R, R])?),
    ])
}

/// `U = e + εu` for every wCl-tagged basis blade `u` of `spec`:
/// `|U*U - e| <= 3 ε^2 |u|^2` plus rounding slack.
fn epsilon_check(spec: &GradedSubspaceSpec, sig: Signature) -> Result<(usize, usize)> {
    let e = Multivector::identity(sig, Field::Complex);
    let (mut checks, mut failures) = (0, 0);
    for m in 0..1u32 << sig.n() {
        let blade = Blade(m);
        let unit = match spec.domain(blade.rank()) {
            CoefficientDomain::Absent => continue,
            CoefficientDomain::Imaginary => Complex64::new(0.0, 1.0),
            _ => Complex64::new(1.0, 0.0),
        };
        let u = Multivector::from_terms(sig, Field::Complex, [(blade, unit)])?;
        let big_u = e.plus(&u.scale(EPSILON))?;
        let residual = unitarity_residual(&big_u)?;
        checks += 1;
        if residual > 3.0 * EPSILON * EPSILON * u.norm_inf().powi(2) + 1e-15 {
            failures += 1;
        }
    }
    Ok((checks, failures))
}

fn check_subalgebra(
    source: String,
    spec: GradedSubspaceSpec,
    group: Option<GradedSubspaceSpec>,
    sig: Signature,
    rng: &mut ChaCha8Rng,
) -> Result<SubalgebraCheck> {
    let in_wc = spec.is_wc_pattern();
    let closed = closure_check(&spec, Operation::Commutator, sig)?.closed;
    let (mut exp_samples, mut exp_failures) = (0, 0);
    if sig.n() <= EXP_SAMPLE_MAX_N {
        for _ in 0..EXP_SAMPLES {
            let u = random_element(&spec, sig, rng)?;
            let big_u = mv_exp(&u, DEFAULT_TOL * 1e-3, DEFAULT_MAX_TERMS)?;
            exp_samples += 1;
            let inside = group.as_ref().is_none_or(|g| distance_outside(g, &big_u) <= DEFAULT_TOL);
            if !inside || !group_membership(&big_u, DEFAULT_TOL) {
                exp_failures += 1;
            }
        }
    }
    let (epsilon_checks, epsilon_failures) = epsilon_check(&spec, sig)?;
    Ok(SubalgebraCheck { source, spec, in_wc, closed, group, exp_samples, exp_failures, epsilon_checks, epsilon_failures })
}

/// Checks the type-level subalgebras `2, 2⊕i0, 2⊕i1, 23` and every rank-level
/// wCl subalgebra in the catalog: pattern, commutator closure, and (for small
/// `n`) that random exponentials are pseudo-unitary.
pub fn verify_theorem5_13(sig: Signature, seed: u64) -> Result<SubalgebraReport> {
    let n = sig.n();
    if n > SUBALGEBRA_MAX_N {
        return Err(Error::LimitExceeded(format!("subalgebra checks support n <= {SUBALGEBRA_MAX_N}, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    for (label, spec, group) in theorem5_pairs(n)? {
        if !spec.is_empty() {
            checks.push(check_subalgebra(format!("T5 {label}"), spec, Some(group), sig, &mut rng)?);
        }
    }
    for entry in catalog_entries(TheoremId::T13, n, Field::Complex)? {
        let source = match &entry.augmentation {
            Some(a) => format!("T13 {} + {a}", entry.label),
            None => format!("T13 {}", entry.label),
        };
        checks.push(check_subalgebra(source, entry.spec, None, sig, &mut rng)?);
    }
    Ok(SubalgebraReport { n, checks })
}

/// Closed form printed for a one-parameter subgroup `exp(φ g)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PrintedForm {
    /// `ch`/`sh` rather than `cos`/`sin`.
    pub hyperbolic: bool,
    /// Factor `i` in front of the odd function.
    pub imaginary_odd: bool,
}

/// One row of the small-n group tables.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupTableRow {
    pub signature: Signature,
    pub generator: String,
    pub printed: Option<PrintedForm>,
    pub suspected_typo: bool,
}

pub const GROUP_TABLES: &str = include_str!("../fixtures/group_tables.txt");

pub fn parse_group_table(text: &str) -> Result<Vec<GroupTableRow>> {
    let bad = |line: usize, msg: &str| Error::Parse { pos: line, msg: format!("group table line {line}: {msg}") };
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() < 5 || f.len() > 6 {
            return Err(bad(i + 1, "expected: n p q generator printed [typo]"));
        }
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad(i + 1, "bad number"));
        let (n, p, q) = (num(f[0])?, num(f[1])?, num(f[2])?);
        if p + q != n {
            return Err(bad(i + 1, "p + q must equal n"));
        }
        let printed = match f[4] {
            "-" => None,
            s => {
                let (even, odd) = s.split_once(',').ok_or_else(|| bad(i + 1, "printed form is even,odd"))?;
                let hyperbolic = match even {
                    "cos" => false,
                    "ch" => true,
                    _ => return Err(bad(i + 1, "even function is cos or ch")),
                };
                let imaginary_odd = match odd {
                    "1" => false,
                    "i" => true,
                    _ => return Err(bad(i + 1, "odd factor is 1 or i")),
                };
                Some(PrintedForm { hyperbolic, imaginary_odd })
            }
        };
        let suspected_typo = match f.get(5) {
            None => false,
            Some(&"typo") => true,
            Some(_) => return Err(bad(i + 1, "trailing field must be 'typo'")),
        };
        rows.push(GroupTableRow { signature: Signature::new(p, q)?, generator: f[3].to_string(), printed, suspected_typo });
    }
    Ok(rows)
}

/// Square of a basis blade from its rank and the metric alone:
/// `(e^A)^2 = (-1)^{k(k-1)/2} Π_{a∈A} η_aa`.
pub fn blade_square(blade: Blade, sig: Signature) -> f64 {
    blade.indices().iter().map(|&a| sig.eta(a - 1)).product::<f64>() * reversal_sign(blade.rank())
}

/// `exp(φ g)` for a single-term generator `g = c e^A` with `g^2 = ±e`.
pub fn one_parameter_oracle(g: &Multivector, phi: f64) -> Result<Multivector> {
    let mut terms = g.terms();
    let (blade, c) = match (terms.next(), terms.next()) {
        (Some(t), None) => t,
        _ => return Err(Error::Inapplicable("oracle needs a single-term generator".into())),
    };
    let square = c * c * blade_square(blade, g.signature());
    if square.im != 0.0 || square.re.abs() != 1.0 {
        return Err(Error::Inapplicable(format!("generator square {square} is not ±1")));
    }
    let (even, odd) = if square.re > 0.0 { (phi.cosh(), phi.sinh()) } else { (phi.cos(), phi.sin()) };
    let sig = g.signature();
    Multivector::identity(sig, Field::Complex).scale(even).plus(&g.to_complex().scale(odd))
}

fn printed_value(form: PrintedForm, blade: Blade, sig: Signature, phi: f64) -> Result<Multivector> {
    let (even, odd) = if form.hyperbolic { (phi.cosh(), phi.sinh()) } else { (phi.cos(), phi.sin()) };
    let factor = if form.imaginary_odd { Complex64::new(0.0, odd) } else { Complex64::new(odd, 0.0) };
    Multivector::from_terms(sig, Field::Complex, [(Blade::IDENTITY, Complex64::new(even, 0.0)), (blade, factor)])
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GroupRowCheck {
    pub row: GroupTableRow,
    /// Largest `|mv_exp - oracle|` over the sampled angles.
    pub exp_error: f64,
    /// Largest `|printed - oracle|`, when a closed form is printed.
    pub printed_error: Option<f64>,
    pub ok: bool,
}

pub const TABLE_ANGLES: [f64; 4] = [-1.3, 0.25, 0.7, 2.0];

/// Compares `mv_exp` with the oracle on every row, and the printed closed form
/// with the oracle on rows not flagged as typos (flagged rows must disagree).
pub fn check_group_tables(rows: &[GroupTableRow], tol: f64) -> Result<Vec<GroupRowCheck>> {
    let mut out = Vec::new();
    for row in rows {
        let sig = row.signature;
        let g = crate::algebra::parse_multivector(&row.generator, sig, Field::Complex)?;
        let blade = g.terms().next().map(|t| t.0).unwrap_or_default();
        let mut exp_error = 0.0f64;
        let mut printed_error: Option<f64> = None;
        for phi in TABLE_ANGLES {
            let oracle = one_parameter_oracle(&g, phi)?;
            let got = mv_exp(&g.scale(phi), tol * 1e-3, DEFAULT_MAX_TERMS)?;
            exp_error = exp_error.max(got.minus(&oracle)?.norm_inf());
            if let Some(form) = row.printed {
                let d = printed_value(form, blade, sig, phi)?.minus(&oracle)?.norm_inf();
                printed_error = Some(printed_error.unwrap_or(0.0).max(d));
            }
        }
        let printed_ok = match printed_error {
            None => true,
            Some(d) if row.suspected_typo => d > tol,
            Some(d) => d <= tol,
        };
        out.push(GroupRowCheck { row: row.clone(), exp_error, printed_error, ok: exp_error <= tol && printed_ok });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_multivector;

    fn mv(text: &str, p: usize, q: usize) -> Multivector {
        parse_multivector(text, Signature::new(p, q).unwrap(), Field::Complex).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_in_wc(&mv("i*e", 2, 0), 0.0));
        assert!(is_in_wc(&mv("e12", 2, 0), 0.0));
        assert!(!is_in_wc(&mv("e1", 2, 0), 0.0));
        assert!(group_membership(&mv("e", 2, 0), 0.0));
        // (e + e1)*(e + e1) = e + 2 e1 + e1 e1
        assert!(!group_membership(&mv("e + e1", 1, 0), 1e-9));
    }

    #[test]
    fn decomposition() {
        let parts = wc_decompose(&mv("i*e + e12", 2, 0), 0.0).unwrap();
        assert_eq!(parts[0].to_string(), "e");
        assert!(parts[1].is_zero());
        assert_eq!(parts[2].to_string(), "e12");
        let parts = wc_decompose(&mv("i*e1 + e123", 3, 0), 0.0).unwrap();
        assert_eq!(parts[1].to_string(), "e1");
        assert_eq!(parts[3].to_string(), "e123");
        assert!(wc_decompose(&mv("0", 3, 0), 0.0).unwrap().iter().all(Multivector::is_zero));
        assert!(matches!(wc_decompose(&mv("e1", 3, 0), 1e-9), Err(Error::NotInLieAlgebra { .. })));
    }

    #[test]
    fn exp_examples() {
        let zero = mv("0", 2, 0);
        assert_eq!(mv_exp(&zero, 1e-15, 50).unwrap(), Multivector::identity(zero.signature(), Field::Complex));
        let phi = 0.7;
        let got = mv_exp(&mv("i*e", 1, 0).scale(phi), 1e-15, 100).unwrap();
        assert!((got.get(Blade::IDENTITY) - Complex64::new(phi.cos(), phi.sin())).norm() < 1e-14);
        let got = mv_exp(&mv("0.5*e12", 1, 1), 1e-15, 100).unwrap();
        assert!((got.get(Blade::IDENTITY).re - 0.5f64.cosh()).abs() < 1e-14);
        assert!((got.get(Blade(0b11)).re - 0.5f64.sinh()).abs() < 1e-14);
    }

    #[test]
    fn exp_needs_enough_terms() {
        assert!(matches!(mv_exp(&mv("0.4*e1", 2, 0), 1e-15, 3), Err(Error::Convergence { max_terms: 3 })));
    }

    #[test]
    fn exp_of_negative_is_inverse() {
        let u = mv("0.3 + 1.7*e1 - 0.9i*e12 + 2*e2", 1, 1);
        let a = mv_exp(&u, 1e-14, 200).unwrap();
        let b = mv_exp(&u.neg(), 1e-14, 200).unwrap();
        assert!(a.product(&b).unwrap().approx_eq(&Multivector::identity(u.signature(), Field::Complex), 1e-8));
    }

    #[test]
    fn blade_squares() {
        let s = Signature::new(1, 1).unwrap();
        assert_eq!(blade_square(Blade(0b11), s), 1.0);
        assert_eq!(blade_square(Blade(0b11), Signature::new(2, 0).unwrap()), -1.0);
        assert_eq!(blade_square(Blade(0b1), Signature::new(0, 1).unwrap()), -1.0);
    }

    #[test]
    fn theorem4_small() {
        for sig in Signature::all_for(4).unwrap() {
            assert!(verify_theorem4(sig).unwrap().ok());
        }
        assert!(verify_theorem4(Signature::euclidean(1).unwrap()).unwrap().ok());
    }

    #[test]
    fn subalgebras_small() {
        let report = verify_theorem5_13(Signature::new(2, 1).unwrap(), 7).unwrap();
        assert!(report.ok(), "{report:#?}");
        assert!(report.checks.iter().any(|c| c.source == "T5 23"));
    }

    #[test]
    fn group_tables() {
        let rows = parse_group_table(GROUP_TABLES).unwrap();
        assert_eq!(rows.len(), 28);
        for check in check_group_tables(&rows, 1e-12).unwrap() {
            assert!(check.ok, "{check:?}");
        }
    }

    #[test]
    fn lie_element_exponentiates_into_group() {
        let u = LieAlgebraElement::new(mv("0.4i*e + 0.8*e12 - 0.3i*e1", 1, 1), 0.0).unwrap();
        let g = u.exp(1e-9).unwrap();
        assert_eq!(g.tol(), 1e-9);
        assert!(LieAlgebraElement::new(mv("e1", 1, 1), 1e-9).is_err());
        assert!(GroupElement::new(mv("2*e", 1, 1), 1e-9).is_err());
    }
}
