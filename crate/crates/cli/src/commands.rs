use std::io::Write;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use rt_lens_core::gauss::{gauss_brute, gauss_closed};
use rt_lens_core::invariant::{hj_expand, Engine};
use rt_lens_core::lattice::validate_order;
use rt_lens_core::verify::{self, SuiteReport};
use rt_lens_core::{Budget, ChainLink, LensSpec, QuadGaussSpec, RootDatum, RootOfUnitySpec, Strategy};

use crate::args::{Cli, Command, Common, Format, Suite};
use crate::render::{self, Header, InvariantDoc, Lens, TableDoc, TableRow, Value, VerifyDoc};
use crate::{exit, CliError, CliResult, SCHEMA};

/// Size the global rayon pool. Call once, before any computation.
pub fn configure_threads(threads: Option<usize>) -> CliResult<()> {
    if let Some(n) = threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

/// Execute one parsed command, writing its output to `out`; returns the
/// process exit code.
pub fn run<W: Write>(cli: Cli, out: &mut W) -> CliResult<i32> {
    match cli.command {
        Command::Invariant { common, lens, timings } => invariant(&common, &lens, timings, out),
        Command::Table { common, m_max } => table(&common, m_max, out),
        Command::Gauss { common, k, brute } => gauss(&common, k, brute, out),
        Command::Verify { common, suite, m_max, samples, seed } => {
            verify_cmd(&common, suite, m_max, samples, seed, out)
        }
    }
}

struct Setup {
    engine: Engine,
    at: RootOfUnitySpec,
    header: Header,
}

fn setup(common: &Common) -> CliResult<Setup> {
    let engine = Engine::new(common.algebra, common.order, Budget(common.budget))?;
    let at = RootOfUnitySpec::new(engine.order(), common.embedding)?;
    let header = header(common, engine.order());
    Ok(Setup { engine, at, header })
}

fn header(common: &Common, order: u32) -> Header {
    Header { schema: SCHEMA, algebra: common.algebra.to_string(), order, embedding: common.embedding }
}

fn describe(h: &Header) -> String {
    format!("{} at N = {}, q = exp(2 pi i * {}/{})", h.algebra, h.order, h.embedding, h.order)
}

fn invariant<W: Write>(common: &Common, lens: &[i64], timings: bool, out: &mut W) -> CliResult<i32> {
    let [m, n] = lens else {
        return Err(CliError::Usage("--lens takes exactly two integers".into()));
    };
    let spec = LensSpec::new(*m, *n)?;
    let s = setup(common)?;
    let start = Instant::now();
    let res = s.engine.lens_invariant(spec, common.strategy)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let doc = InvariantDoc {
        header: s.header,
        strategy: res.strategy.to_string(),
        lens: Lens { m: *m, n: *n },
        hj_terms: res.framings.clone(),
        sign: res.sign,
        sigma: Value::new(&res.sigma, &s.at)?,
        f: Value::new(&res.f, &s.at)?,
        nabla: Value::new(&res.nabla, &s.at)?,
        timings_ms: timings.then_some(elapsed_ms),
    };
    match common.format {
        Format::Json => render::write_json(out, &doc)?,
        Format::Csv => {
            let row = TableRow {
                m: *m,
                n: *n,
                hj_terms: doc.hj_terms.clone(),
                strategy: doc.strategy.clone(),
                f: Some(doc.f.clone()),
                nabla: Some(doc.nabla.clone()),
                h0: None,
            };
            render::write_csv(out, &[row])?;
        }
        Format::Text => {
            writeln!(out, "L({m}, {n}) for {}", describe(&doc.header))?;
            writeln!(out, "  continued fraction  {:?}", doc.hj_terms)?;
            writeln!(out, "  strategy            {}", doc.strategy)?;
            writeln!(out, "  nonpositive eigs    {}", doc.sign.nonpositive)?;
            for (name, v) in [("Sigma", &doc.sigma), ("F", &doc.f), ("nabla", &doc.nabla)] {
                writeln!(out, "  {name:<6} = {}", v.exact)?;
                writeln!(out, "  {:<6} ~ {}", "", v.numeric.text())?;
            }
            writeln!(out, "  time                {elapsed_ms:.3} ms")?;
        }
    }
    Ok(exit::OK)
}

fn table<W: Write>(common: &Common, m_max: i64, out: &mut W) -> CliResult<i32> {
    let s = setup(common)?;
    let degenerate = s.engine.is_degenerate();
    let mut rows = Vec::new();
    for spec in LensSpec::all_up_to(m_max) {
        let hj = hj_expand(spec);
        let row = if degenerate {
            let (h0, used) = s.engine.chain_h0(&ChainLink::from(&hj), common.strategy)?;
            TableRow {
                m: spec.m(),
                n: spec.n(),
                hj_terms: hj.terms,
                strategy: used.to_string(),
                f: None,
                nabla: None,
                h0: Some(Value::new(&h0, &s.at)?),
            }
        } else {
            let r = s.engine.lens_invariant(spec, common.strategy)?;
            TableRow {
                m: spec.m(),
                n: spec.n(),
                hj_terms: hj.terms,
                strategy: r.strategy.to_string(),
                f: Some(Value::new(&r.f, &s.at)?),
                nabla: Some(Value::new(&r.nabla, &s.at)?),
                h0: None,
            }
        };
        rows.push(row);
    }
    let note = if degenerate {
        let e = s.engine.lens_invariant(LensSpec::new(2, 1)?, Strategy::Auto).unwrap_err();
        eprintln!("warning: {e}; F and nabla are left empty");
        Some(e.to_string())
    } else {
        None
    };
    let doc = TableDoc { header: s.header, degenerate: note, rows };
    match common.format {
        Format::Json => render::write_json(out, &doc)?,
        Format::Csv => render::write_csv(out, &doc.rows)?,
        Format::Text => {
            writeln!(out, "lens spaces L(m, n), 2 <= m <= {m_max}, for {}", describe(&doc.header))?;
            writeln!(out, "{:>4} {:>4}  {:<18} {:<46} nabla", "m", "n", "terms", "F")?;
            for r in &doc.rows {
                let f = r.f.as_ref().map_or("undefined".to_string(), |v| v.numeric.text());
                let nb = r.nabla.as_ref().map_or("undefined".to_string(), |v| v.numeric.text());
                writeln!(out, "{:>4} {:>4}  {:<18} {:<46} {}", r.m, r.n, format!("{:?}", r.hj_terms), f, nb)?;
            }
        }
    }
    Ok(exit::OK)
}

fn gauss<W: Write>(common: &Common, k: i64, brute: bool, out: &mut W) -> CliResult<i32> {
    let datum = RootDatum::new(common.algebra);
    let order = validate_order(&datum, common.order)?;
    let at = RootOfUnitySpec::new(order, common.embedding)?;
    let spec = QuadGaussSpec::lattice(&datum, order, k);
    let closed = gauss_closed(&spec);
    let brute_val = if brute { Some(gauss_brute(&spec, Budget(common.budget))?) } else { None };
    let agree = brute_val.as_ref().map(|b| *b == closed);
    let doc = render::GaussDoc {
        header: header(common, order),
        k,
        closed: Value::new(&closed, &at)?,
        brute: brute_val.as_ref().map(|b| Value::new(b, &at)).transpose()?,
        agree,
    };
    match common.format {
        Format::Json => render::write_json(&mut *out, &doc)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["k", "re", "im", "exact_json", "agree"])?;
            w.write_record([
                k.to_string(),
                render::fmt15(doc.closed.numeric.re),
                render::fmt15(doc.closed.numeric.im),
                serde_json::to_string(&doc.closed.exact)?,
                agree.map_or(String::new(), |a| a.to_string()),
            ])?;
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "G_{k} for {}", describe(&doc.header))?;
            writeln!(out, "  closed = {}", doc.closed.exact)?;
            writeln!(out, "         ~ {}", doc.closed.numeric.text())?;
            if let Some(a) = agree {
                writeln!(out, "  brute force {}", if a { "agrees" } else { "DISAGREES" })?;
            }
        }
    }
    Ok(if agree == Some(false) { exit::VERIFICATION_FAILED } else { exit::OK })
}

pub fn random_specs(rng: &mut StdRng, order: u32, rank: usize, count: usize) -> Vec<QuadGaussSpec> {
    let n = order as i64;
    (0..count)
        .map(|_| {
            let upper: Vec<Vec<i64>> = (0..rank).map(|_| (0..rank).map(|_| rng.gen_range(0..n)).collect()).collect();
            let form = (0..rank).map(|i| (0..rank).map(|j| upper[i.min(j)][i.max(j)]).collect()).collect();
            let linear = (0..rank).map(|_| rng.gen_range(0..n)).collect();
            QuadGaussSpec::new(order, form, linear, rng.gen_range(0..n)).expect("random spec is well formed")
        })
        .collect()
}

/// Build the report for one suite.
pub fn suite_report(common: &Common, suite: Suite, m_max: i64, samples: usize, seed: u64) -> CliResult<SuiteReport> {
    let budget = Budget(common.budget);
    let mut rng = StdRng::seed_from_u64(seed);
    let datum = RootDatum::new(common.algebra);
    let order = validate_order(&datum, common.order)?;
    Ok(match suite {
        Suite::Root => verify::root_suite(common.algebra),
        Suite::Gauss => {
            let extra = if budget.check("brute-force Gauss sum", order as u64, datum.rank as u32).is_ok() {
                random_specs(&mut rng, order, datum.rank, samples)
            } else {
                Vec::new()
            };
            verify::gauss_suite(&datum, order, &extra, budget)
        }
        Suite::Weyl => {
            let n = order as i64;
            let mus: Vec<Vec<i64>> =
                (0..samples).map(|_| (0..datum.rank).map(|_| rng.gen_range(-2 * n..=2 * n)).collect()).collect();
            let mut rep = verify::weyl_suite(&datum, order, &mus)?;
            let dense_fits = (order as u128).pow(2 * datum.rank as u32) <= budget.0 as u128;
            if dense_fits {
                let engine = Engine::from_datum(datum.clone(), order as u64, budget)?;
                for _ in 0..2 {
                    let framings = [rng.gen_range(-6..=6), rng.gen_range(-6..=6)];
                    rep.checks.extend(verify::weyl_antisymmetry(&engine, &framings)?.checks);
                }
            }
            rep
        }
        Suite::Z | Suite::Lens | Suite::Kirby | Suite::Homeo => {
            let engine = Engine::from_datum(datum, order as u64, budget)?;
            match suite {
                Suite::Z => verify::z_suite(&engine),
                Suite::Lens => verify::lens_suite(&engine, m_max),
                Suite::Kirby => verify::kirby_suite(&engine),
                _ => verify::homeo_report(&engine, m_max, common.strategy),
            }
        }
    })
}

fn verify_cmd<W: Write>(
    common: &Common,
    suite: Suite,
    m_max: i64,
    samples: usize,
    seed: u64,
    out: &mut W,
) -> CliResult<i32> {
    let report = suite_report(common, suite, m_max, samples, seed)?;
    let order = validate_order(&RootDatum::new(common.algebra), common.order)?;
    let doc = VerifyDoc {
        header: header(common, order),
        suite: suite.name().to_string(),
        passed: report.passed(),
        checks: report.checks,
    };
    match common.format {
        Format::Json => render::write_json(&mut *out, &doc)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["suite", "check", "passed", "witness"])?;
            for c in &doc.checks {
                w.write_record([
                    doc.suite.as_str(),
                    &c.name,
                    &c.passed.to_string(),
                    c.witness.as_deref().unwrap_or(""),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "verify {}: {}", doc.suite, describe(&doc.header))?;
            for c in &doc.checks {
                writeln!(out, "  {} {}", if c.passed { "PASS" } else { "FAIL" }, c.name)?;
                if let Some(w) = &c.witness {
                    writeln!(out, "       {w}")?;
                }
            }
            let passed = doc.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} checks passed", doc.checks.len())?;
        }
    }
    Ok(if doc.passed { exit::OK } else { exit::VERIFICATION_FAILED })
}
