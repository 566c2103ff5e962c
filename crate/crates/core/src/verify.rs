//! Property suites over one `(algebra, N)` configuration.
//!
//! Each suite returns a [`SuiteReport`] with one [`Check`] per property and
//! exact witnesses on failure. Random inputs come from the caller so the
//! suites stay deterministic.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::cyclo::CycNum;
use crate::gauss::{g_k, gauss_brute, gauss_closed, QuadGaussSpec};
use crate::invariant::{
    hj_expand, homeo_suite, signature_count, weyl_q_alternating, weyl_shifted_index, ChainLink, Engine, HomeoKind,
    LensSpec, Strategy,
};
use crate::lattice::{alcove, Budget};
use crate::rootsys::{determinant, LieType, RootDatum};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[cfg_attr(feature = "serde", serde(skip_serializing_if = "Option::is_none", default))]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Self { name: name.into(), passed: true, witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Self { name: name.into(), passed: false, witness: Some(witness.into()) }
    }

    pub fn from_bool(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    /// Exact equality of two field elements, with both values as witness.
    pub fn equal(name: impl Into<String>, left: &CycNum, right: &CycNum) -> Self {
        Self::from_bool(name, left == right, || format!("{left} != {right}"))
    }

    fn from_result(name: impl Into<String>, r: Result<Check>) -> Self {
        match r {
            Ok(c) => c,
            Err(e) => Self::fail(name, e.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>) -> Self {
        Self { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn pass_count(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }
}

/// Root-datum invariants for one algebra.
pub fn root_suite(lie_type: LieType) -> SuiteReport {
    let d = RootDatum::new(lie_type);
    let mut rep = SuiteReport::new("root");
    let name = |s: &str| format!("{lie_type}: {s}");
    let r = d.rank;

    rep.push(Check::from_bool(
        name("positive root count"),
        d.positive_roots.len() == lie_type.positive_root_count(),
        || format!("{} roots", d.positive_roots.len()),
    ));
    let theta_norm = d.pairing_unchecked(&d.highest_root, &d.highest_root);
    rep.push(Check::from_bool(name("(theta, theta)"), theta_norm == lie_type.highest_root_norm(), || {
        format!("{theta_norm}")
    }));
    let det = determinant(&d.gram);
    let want_det = match lie_type {
        LieType::G2 => 3,
        LieType::F4 => 4,
        LieType::E8 => 1,
    };
    rep.push(Check::from_bool(name("det G"), det == want_det, || format!("{det}")));
    let h = 1 + 2 * d.pairing_unchecked(&d.rho, &d.highest_root) / theta_norm;
    let want_h = match lie_type {
        LieType::G2 => 4,
        LieType::F4 => 9,
        LieType::E8 => 30,
    };
    rep.push(Check::from_bool(name("dual Coxeter number"), d.dual_coxeter == want_h && h == want_h, || {
        format!("stored {}, from rho {h}", d.dual_coxeter)
    }));
    let symmetric_even = (0..r).all(|i| d.gram[i][i] % 2 == 0 && (0..r).all(|j| d.gram[i][j] == d.gram[j][i]));
    rep.push(Check::from_bool(name("Gram symmetric with even diagonal"), symmetric_even, || format!("{:?}", d.gram)));
    let cartan_ok = (0..r).all(|i| (0..r).all(|j| d.cartan[i][j] * d.gram[i][i] == 2 * d.gram[i][j]));
    rep.push(Check::from_bool(name("A_ij = 2 G_ij / G_ii"), cartan_ok, || format!("{:?}", d.cartan)));
    let mut two_rho = vec![0i64; r];
    for a in &d.positive_roots {
        for (t, x) in two_rho.iter_mut().zip(a) {
            *t += x;
        }
    }
    let rho_ok = two_rho.iter().zip(&d.rho).all(|(t, x)| *t == 2 * x) && d.rho.iter().all(|x| *x > 0);
    rep.push(Check::from_bool(name("2 rho = sum of positive roots"), rho_ok, || format!("{:?}", d.rho)));
    let mut norms: Vec<i64> = d.norms.clone();
    norms.sort();
    norms.dedup();
    let want_ratio = match lie_type {
        LieType::G2 => 3,
        LieType::F4 => 2,
        LieType::E8 => 1,
    };
    let ratio_ok = norms.len() <= 2 && norms[norms.len() - 1] == want_ratio * norms[0];
    rep.push(Check::from_bool(name("simple root norm ratio"), ratio_ok, || format!("{norms:?}")));

    match d.weyl_group() {
        Ok(w) => {
            rep.push(Check::from_bool(name("Weyl group order"), w.len() as u64 == lie_type.weyl_order(), || {
                format!("{}", w.len())
            }));
            let basis: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as i64).collect()).collect();
            let invariant = w.iter().all(|s| {
                basis.iter().all(|x| {
                    basis.iter().all(|y| d.pairing_unchecked(&s.apply(x), &s.apply(y)) == d.pairing_unchecked(x, y))
                })
            });
            rep.push(Check::from_bool(name("Weyl group preserves the pairing"), invariant, String::new));
            let tau = d.longest_element(&w);
            let minus_id = basis.iter().all(|x| tau.apply(x).iter().zip(x).all(|(a, b)| *a == -*b));
            rep.push(Check::from_bool(name("longest element is -1"), minus_id, || format!("{:?}", tau.matrix)));
        }
        Err(e) => {
            let refused = lie_type == LieType::E8 && matches!(e, Error::WeylGroupTooLarge(_));
            rep.push(Check::from_bool(name("Weyl group enumeration refused"), refused, || e.to_string()));
        }
    }
    rep
}

/// `gauss_closed = gauss_brute` for every `G_k` and for caller-supplied
/// specs, plus the closed-form identities that also hold for E8.
pub fn gauss_suite(datum: &RootDatum, order: u32, extra: &[QuadGaussSpec], budget: Budget) -> SuiteReport {
    let mut rep = SuiteReport::new("gauss");
    let n = order;
    let brute_ok = budget.check("brute-force Gauss sum", n as u64, datum.rank as u32).is_ok();
    if brute_ok {
        for k in 0..n as i64 {
            let spec = QuadGaussSpec::lattice(datum, n, k);
            let c = gauss_brute(&spec, budget)
                .map(|b| Check::equal(format!("G_{k}: closed = brute"), &gauss_closed(&spec), &b));
            rep.push(Check::from_result(format!("G_{k}: closed = brute"), c));
        }
    }
    for (i, spec) in extra.iter().enumerate() {
        let c = gauss_brute(spec, budget)
            .map(|b| Check::equal(format!("random spec {i}: closed = brute"), &gauss_closed(spec), &b));
        rep.push(Check::from_result(format!("random spec {i}: closed = brute"), c));
    }
    let g1 = g_k(datum, n, 1);
    let gm = g_k(datum, n, n as i64 - 1);
    rep.push(Check::from_result(
        "G_{N-1} = galois(G_1, -1)",
        g1.galois(-1).map(|g| Check::equal("G_{N-1} = galois(G_1, -1)", &gm, &g)),
    ));
    let nr = num_bigint::BigInt::from(n).pow(datum.rank as u32);
    rep.push(Check::equal("|G_1|^2 = N^r", &(&g1 * &gm), &CycNum::from_integer(n, nr)));
    rep.push(Check::equal("G_k periodic in k", &g_k(datum, n, 2), &g_k(datum, n, 2 + n as i64)));
    rep.push(Check::equal(
        "G_0 = N^r",
        &g_k(datum, n, 0),
        &CycNum::from_integer(n, num_bigint::BigInt::from(n).pow(datum.rank as u32)),
    ));
    rep
}

/// Denominator product against the alternating Weyl sum at the given lifts.
pub fn weyl_suite(datum: &RootDatum, order: u32, samples: &[Vec<i64>]) -> Result<SuiteReport> {
    let w = datum.weyl_group()?;
    let mut rep = SuiteReport::new("weyl");
    for mu in samples {
        let prod = crate::invariant::weyl_q(datum, order, mu);
        let alt = weyl_q_alternating(datum, &w, order, mu);
        rep.push(Check::equal(format!("Q{mu:?}: product = alternating sum"), &prod, &alt));
        let shifted: Vec<i64> =
            mu.iter().enumerate().map(|(i, x)| if i == 0 { x + order as i64 } else { *x }).collect();
        rep.push(Check::equal(
            format!("Q{mu:?}: lift independent"),
            &prod,
            &crate::invariant::weyl_q(datum, order, &shifted),
        ));
    }
    Ok(rep)
}

/// `|z| = 1`, `Ω G_1 = q^{3(ρ,ρ)}`, `z` closed form against its alcove
/// sum, and `d_λ = d_{λ*}` over the alcove.
pub fn z_suite(engine: &Engine) -> SuiteReport {
    let mut rep = SuiteReport::new("z");
    let n = engine.order();
    let d = engine.datum();
    let z = engine.z();
    rep.push(Check::from_bool("z * galois(z, -1) = 1", (z * &z.conj()).is_one(), || format!("z = {z}")));
    let rr = d.pairing_unchecked(&d.rho, &d.rho);
    rep.push(Check::equal("Omega G_1 = q^{3(rho,rho)}", &(engine.omega() * engine.g1()), &CycNum::q_power(n, 3 * rr)));
    if engine.budget().check("alcove enumeration", n as u64, d.rank as u32).is_ok() {
        rep.push(Check::from_result(
            "z closed = z alcove sum",
            engine.z_brute().map(|b| Check::equal("z closed = z alcove sum", z, &b)),
        ));
        match (d.weyl_group(), alcove(d, n, engine.budget())) {
            (Ok(w), Ok(al)) => {
                let tau = d.longest_element(&w);
                let ok = al.members.iter().all(|lam| {
                    let star: Vec<i64> = tau.apply(lam).into_iter().map(|x| -x).collect();
                    engine.d_lambda(lam) == engine.d_lambda(&star)
                });
                rep.push(Check::from_bool("d_lambda = d_lambda*", ok, String::new));
            }
            (Err(e), _) | (_, Err(e)) => rep.push(Check::fail("d_lambda = d_lambda*", e.to_string())),
        }
    }
    rep
}

/// Strategy agreement and reality over every `L(m, n)` with `m ≤ m_max`.
///
/// `h_0^{(s)}` is compared across strategies (the literal multisum only
/// while it fits the budget), full tables are compared between the two
/// recursions, and where `Q(0) ≠ 0` the invariant is checked for
/// `∇ = F F̄` and reality.
pub fn lens_suite(engine: &Engine, m_max: i64) -> SuiteReport {
    let mut rep = SuiteReport::new("lens");
    let n = engine.order() as u64;
    let r = engine.datum().rank;
    for spec in LensSpec::all_up_to(m_max) {
        let hj = hj_expand(spec);
        let chain = ChainLink::from(&hj);
        let label = format!("L({}, {}) {:?}", spec.m(), spec.n(), hj.terms);
        let back = hj.evaluate();
        rep.push(Check::from_bool(
            format!("{label}: continued fraction"),
            back == (spec.m() as i128, spec.n() as i128),
            || format!("{back:?}"),
        ));
        let sc = signature_count(chain.framings());
        rep.push(Check::from_bool(format!("{label}: positive definite"), sc.nonpositive == 0, || format!("{sc:?}")));

        let run = || -> Result<Check> {
            let (dense, _) = engine.chain_h0(&chain, Strategy::RecursionDense)?;
            let (fact, _) = engine.chain_h0(&chain, Strategy::RecursionFactored)?;
            if dense != fact {
                return Ok(Check::fail("", format!("dense {dense} != factored {fact}")));
            }
            if engine.budget().check("", n, (r * chain.len()) as u32).is_ok() {
                let (direct, _) = engine.chain_h0(&chain, Strategy::DirectMultisum)?;
                if direct != dense {
                    return Ok(Check::fail("", format!("direct {direct} != recursion {dense}")));
                }
            }
            let td = engine.h_tables(chain.framings(), Strategy::RecursionDense)?;
            let tf = engine.h_tables(chain.framings(), Strategy::RecursionFactored)?;
            if td != tf {
                return Ok(Check::fail("", "dense and factored tables differ"));
            }
            Ok(Check::pass(""))
        };
        let mut c = Check::from_result("", run());
        c.name = format!("{label}: strategies agree");
        rep.push(c);

        if !engine.is_degenerate() {
            let c = engine.lens_invariant(spec, Strategy::Auto).map(|res| {
                let ok = res.nabla == &res.f * &res.f.conj() && res.nabla.is_real();
                Check::from_bool(format!("{label}: nabla = F conj(F) is real"), ok, || format!("{}", res.nabla))
            });
            rep.push(Check::from_result(format!("{label}: nabla = F conj(F) is real"), c));
        }
    }
    rep
}

/// Kirby-calculus consequences on small chains: `F(S³) = 1` from `[±1]`,
/// `Σ([-1]) = z`, the `S² × S¹` closed form, and blow-downs
/// `F([a, ±1]) = F([a ∓ 1])`.
pub fn kirby_suite(engine: &Engine) -> SuiteReport {
    let mut rep = SuiteReport::new("kirby");
    let one = CycNum::one(engine.order());
    let eval = |f: &[i64]| engine.chain_invariant(&ChainLink::new(f.to_vec())?, Strategy::Auto);

    rep.push(Check::from_result("F([+1]) = 1", eval(&[1]).map(|r| Check::equal("F([+1]) = 1", &r.f, &one))));
    rep.push(Check::from_result("F([-1]) = 1", eval(&[-1]).map(|r| Check::equal("F([-1]) = 1", &r.f, &one))));
    rep.push(Check::from_result(
        "Sigma([-1]) = z",
        eval(&[-1]).map(|r| Check::equal("Sigma([-1]) = z", &r.sigma, engine.z())),
    ));
    rep.push(Check::from_result(
        "F([0]) = 1/(Omega Q(0))",
        engine.sign_convention().map(|s| {
            Check::from_bool("F([0]) = 1/(Omega Q(0))", s.s2xs1_z_power == Some(0), || {
                format!("F([0]) = {}, closed form {}, z power {:?}", s.f_zero_chain, s.s2xs1_closed, s.s2xs1_z_power)
            })
        }),
    ));
    for a in -3i64..=3 {
        for eps in [1i64, -1] {
            let name = format!("F([{a}, {eps:+}]) = F([{}])", a - eps);
            let c = eval(&[a, eps]).and_then(|l| eval(&[a - eps]).map(|r| Check::equal(name.clone(), &l.f, &r.f)));
            rep.push(Check::from_result(name, c));
        }
    }
    rep
}

/// Homeomorphism and orientation-reversal checks as a suite report.
pub fn homeo_report(engine: &Engine, m_max: i64, strategy: Strategy) -> SuiteReport {
    let mut rep = SuiteReport::new("homeo");
    match homeo_suite(engine, m_max, strategy) {
        Ok(h) => {
            for c in h.checks {
                let what = match c.kind {
                    HomeoKind::InverseN => "F",
                    HomeoKind::Reversal => "nabla",
                };
                let name =
                    format!("{what}(L({}, {})) = {what}(L({}, {}))", c.left.m(), c.left.n(), c.right.m(), c.right.n());
                rep.push(Check::from_bool(name, c.passed, String::new));
            }
        }
        Err(e) => rep.push(Check::fail(format!("lens spaces up to m = {m_max}"), e.to_string())),
    }
    rep
}

/// `h_{σ(λ+ρ)-ρ} = det σ · h_λ` for every `σ ∈ W`, every class and every
/// table of the chain.
pub fn weyl_antisymmetry(engine: &Engine, framings: &[i64]) -> Result<SuiteReport> {
    let d = engine.datum();
    let n = engine.order();
    let w = d.weyl_group()?;
    let tables = engine.h_tables(framings, Strategy::RecursionDense)?;
    let mut rep = SuiteReport::new("weyl-antisymmetry");
    for t in &tables {
        let len = t.cells.len();
        let mut bad = None;
        'outer: for s in &w {
            for lam in 0..len {
                let img = weyl_shifted_index(d, n, s, lam);
                let lhs = CycNum::from_group_ring(n, &t.cells[img]);
                let rhs = CycNum::from_group_ring(n, &t.cells[lam]);
                let rhs = if s.det > 0 { rhs } else { -rhs };
                if lhs != rhs {
                    bad = Some(format!("sigma {:?}, class {lam}", s.matrix));
                    break 'outer;
                }
            }
        }
        let name = format!("{framings:?} step {}: h antisymmetric under shifted W", t.step);
        rep.push(match bad {
            None => Check::pass(name),
            Some(wit) => Check::fail(name, wit),
        });
    }
    Ok(rep)
}
