use std::fmt::Write as _;

use braidlab::braid::{theta as theta_map, PureBraid, SigmaBraid};
use braidlab::freelie::LieElement;
use braidlab::homology::{e1_report, AbelianInvariants, E1Report};
use braidlab::kohno::{
    delta_example_check, gr_theta, gr_theta_matrix, kohno_rank, relations_check, KohnoElement,
};
use braidlab::simplicial::{
    instance_ap, instance_fs1, random_moore_cycles, theta_simplicial_check,
    verify_simplicial_identities, IdentityReport,
};
use braidlab::word::{Alphabet, FreeWord};
use braidlab::Error;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{BraidArgs, GrCommand, HomologyArgs, InstanceChoice, RunConfig, ThetaArgs, VerifyArgs};

#[derive(Debug)]
pub enum CliError {
    Engine(Error),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(e) => e.fmt(f),
            CliError::Usage(s) => f.write_str(s),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Engine(e) => match e {
                Error::Parse { .. } => 2,
                Error::IndexOutOfRange { .. }
                | Error::AlphabetMismatch { .. }
                | Error::NotPure(_)
                | Error::LevelMismatch { .. } => 3,
                Error::BudgetExceeded(_) | Error::DegreeOverflow { .. } => 4,
                _ => 1,
            },
        }
    }
}

/// A finished command: text for humans, a JSON result, and the exit status
/// (0 pass, 1 property failure, 5 assertion failure).
pub struct Output {
    pub text: String,
    pub json: Value,
    pub status: u8,
    pub failure: Option<String>,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            status: 0,
            failure: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == 0
    }
}

fn linking_pairs(b: &PureBraid) -> Result<Vec<(usize, usize, i64)>, CliError> {
    let lk = b.linking_matrix()?;
    let n = lk.len();
    Ok((1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, lk[i - 1][j - 1]))
        .collect())
}

fn format_linking(pairs: &[(usize, usize, i64)]) -> String {
    pairs
        .iter()
        .map(|(i, j, v)| format!("lk({i},{j})={v}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn linking_json(pairs: &[(usize, usize, i64)]) -> Value {
    pairs
        .iter()
        .map(|(i, j, v)| json!({"i": i, "j": j, "linking": v}))
        .collect()
}

pub fn braid(a: &BraidArgs) -> Result<Output, CliError> {
    let b = SigmaBraid::parse(&a.word, a.n)?;
    let pure = || PureBraid::new(b.clone());
    let mut lines: Vec<(&str, String)> = Vec::new();
    let mut result = serde_json::Map::new();
    result.insert("braid".into(), json!(b.to_string()));
    result.insert("strands".into(), json!(b.strands()));
    if a.trivial {
        let t = b.is_trivial();
        lines.push(("trivial", t.to_string()));
        result.insert("trivial".into(), json!(t));
    }
    if let Some(k) = a.delete {
        let d = b.delete_strand(k)?;
        lines.push(("delete", d.to_string()));
        result.insert(
            "delete".into(),
            json!({"strand": k, "braid": d.to_string()}),
        );
    }
    if let Some(k) = a.double {
        let d = b.double_strand(k)?;
        lines.push(("double", d.to_string()));
        result.insert(
            "double".into(),
            json!({"strand": k, "braid": d.to_string()}),
        );
    }
    if a.linking {
        let pairs = linking_pairs(&pure()?)?;
        lines.push(("linking", format_linking(&pairs)));
        result.insert("linking".into(), linking_json(&pairs));
    }
    if a.brunnian {
        let v = pure()?.is_brunnian();
        lines.push(("brunnian", v.to_string()));
        result.insert("brunnian".into(), json!(v));
    }
    if a.qbrunnian {
        let v = pure()?.is_qbrunnian();
        lines.push(("qbrunnian", v.to_string()));
        result.insert("qbrunnian".into(), json!(v));
    }
    let text = match lines.len() {
        0 => format!(
            "{}\npermutation {:?}\n",
            b.to_prefixed_string(),
            b.permutation()
        ),
        1 => format!("{}\n", lines[0].1),
        _ => lines.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    };
    Ok(Output::ok(text, Value::Object(result)))
}

pub fn theta(a: &ThetaArgs) -> Result<Output, CliError> {
    let w = FreeWord::parse(&a.word, Alphabet::new('y', a.n))?;
    let b = theta_map(a.n, &w)?;
    let mut text = format!("{b}\n");
    let mut result = serde_json::Map::new();
    result.insert("word".into(), json!(w.to_string()));
    result.insert("n".into(), json!(a.n));
    result.insert("braid".into(), json!(b.to_string()));
    if a.linking {
        let pairs = linking_pairs(&b)?;
        writeln!(text, "{}", format_linking(&pairs)).unwrap();
        result.insert("linking".into(), linking_json(&pairs));
    }
    if a.brunnian {
        let v = b.is_brunnian();
        writeln!(text, "brunnian: {v}").unwrap();
        result.insert("brunnian".into(), json!(v));
    }
    Ok(Output::ok(text, Value::Object(result)))
}

pub fn gr(g: &GrCommand, config: &RunConfig) -> Result<Output, CliError> {
    let budget = &config.budget;
    match g {
        GrCommand::Theta { n, expr } => {
            budget.check_level(*n)?;
            let e = LieElement::parse(expr, Alphabet::new('y', *n))?;
            budget.check_degree(e.max_degree())?;
            let img = gr_theta(*n, &e)?;
            Ok(Output::ok(
                format!("{img}\n"),
                json!({"n": n, "expr": expr, "image": img.to_string()}),
            ))
        }
        GrCommand::Rank { n, m } => {
            budget.check_degree(*m)?;
            if *n == 0 {
                return Err(Error::IndexOutOfRange { index: 0, bound: 1 }.into());
            }
            let r = kohno_rank(*n, *m);
            Ok(Output::ok(
                format!("{r}\n"),
                json!({"n": n, "m": m, "rank": r}),
            ))
        }
        GrCommand::CheckRelations { n } => {
            budget.check_level(*n)?;
            let witnesses = relations_check(*n)?;
            let failed: Vec<_> = witnesses.iter().filter(|w| !w.holds()).collect();
            let rows: Vec<Value> = witnesses
                .iter()
                .map(|w| json!({"relation": w.instance.describe(), "residue": w.residue.to_string()}))
                .collect();
            let mut text = format!(
                "{} relation instances, {} nonzero residues\n",
                witnesses.len(),
                failed.len()
            );
            for w in &failed {
                writeln!(text, "  {} -> {}", w.instance.describe(), w.residue).unwrap();
            }
            let mut out = Output::ok(
                text,
                json!({"n": n, "instances": rows, "failures": failed.len()}),
            );
            if let Some(w) = failed.first() {
                out.status = 1;
                out.failure = Some(format!(
                    "relation {} has residue {}",
                    w.instance.describe(),
                    w.residue
                ));
            }
            Ok(out)
        }
        GrCommand::DeltaExample => {
            let r = delta_example_check()?;
            let mut out = Output::ok(
                format!("{}\n", r.summary()),
                serde_json::to_value(&r).unwrap(),
            );
            if !r.passed() {
                out.status = 1;
                out.failure = Some(format!("delta example failed: {r:?}"));
            }
            Ok(out)
        }
        GrCommand::ThetaMatrix { n, m, matrix } => {
            let t = gr_theta_matrix(*n, *m, budget)?;
            let divisors: Vec<String> = t
                .elementary_divisors
                .iter()
                .map(ToString::to_string)
                .collect();
            let mut text = format!(
                "rank {} (witt rank {}, {})\nelementary divisors [{}]\n",
                t.rank,
                t.witt_rank,
                if t.injective() {
                    "injective"
                } else {
                    "not injective"
                },
                divisors.join(", ")
            );
            let mut value = serde_json::to_value(&t).unwrap();
            if *matrix {
                text.push_str(&t.matrix.to_text());
                value["matrix"] = json!(t.matrix.to_text().lines().collect::<Vec<_>>());
            }
            let mut out = Output::ok(text, value);
            if !t.injective() {
                out.status = 1;
                out.failure = Some(format!("rank {} below witt rank {}", t.rank, t.witt_rank));
            }
            Ok(out)
        }
    }
}

fn known_value(m: usize, t: usize) -> Option<AbelianInvariants> {
    match (m, t) {
        (1, 1) | (2, 2) => Some(AbelianInvariants::free(1)),
        (1, _) | (2, 1) | (2, 3) => Some(AbelianInvariants::trivial()),
        _ => None,
    }
}

fn homology_text(r: &E1Report) -> String {
    let mut s = String::from("m  t  group  basis  boundary_rank\n");
    for c in &r.cells {
        writeln!(
            s,
            "{:<2} {:<2} {:<6} {:<6} {}",
            c.lie_degree,
            c.simplicial_degree,
            c.group().to_string(),
            c.basis_size,
            c.boundary_rank
        )
        .unwrap();
    }
    s.push_str("gr(theta) ranks\nn  m  rank  witt  kohno\n");
    for c in &r.theta_ranks {
        writeln!(
            s,
            "{:<2} {:<2} {:<5} {:<5} {}",
            c.n, c.m, c.rank, c.witt_rank, c.kohno_rank
        )
        .unwrap();
    }
    s
}

pub fn homology(a: &HomologyArgs, config: &RunConfig) -> Result<Output, CliError> {
    let r = e1_report(a.m, a.n, &config.budget)?;
    let mut out = Output::ok(homology_text(&r), serde_json::to_value(&r).unwrap());
    if a.assert_known {
        for c in &r.cells {
            if let Some(expect) = known_value(c.lie_degree, c.simplicial_degree) {
                if c.group() != expect {
                    out.status = 5;
                    out.failure = Some(format!(
                        "assertion failed at (m={}, t={}): {} but expected {}",
                        c.lie_degree,
                        c.simplicial_degree,
                        c.group(),
                        expect
                    ));
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn random_kohno(n: usize, rng: &mut ChaCha8Rng) -> Result<KohnoElement, Error> {
    let mut out = KohnoElement::zero(n);
    for _ in 0..rng.gen_range(1..=3) {
        let j = rng.gen_range(2..=n);
        let mut term = KohnoElement::generator(rng.gen_range(1..j), j, n)?;
        if rng.gen_bool(0.5) {
            let l = rng.gen_range(2..=n);
            term = term.bracket(&KohnoElement::generator(rng.gen_range(1..l), l, n)?)?;
        }
        out = out.try_add(&term.scale(&BigInt::from(rng.gen_range(-3..=3))))?;
    }
    Ok(out)
}

fn jacobi_failures(samples: usize, rng: &mut ChaCha8Rng) -> Result<usize, Error> {
    let mut failures = 0;
    for _ in 0..samples {
        let n = rng.gen_range(3..=5);
        let (a, b, c) = (
            random_kohno(n, rng)?,
            random_kohno(n, rng)?,
            random_kohno(n, rng)?,
        );
        let j = a
            .bracket(&b.bracket(&c)?)?
            .try_add(&b.bracket(&c.bracket(&a)?)?)?
            .try_add(&c.bracket(&a.bracket(&b)?)?)?;
        if !j.is_zero() {
            failures += 1;
        }
    }
    Ok(failures)
}

fn identity_line(r: &IdentityReport) -> String {
    format!(
        "identities {} (levels 0..={}): {} checks, {} failures",
        r.instance,
        r.max_level,
        r.checked(),
        r.failures.len()
    )
}

pub fn verify(a: &VerifyArgs, config: &RunConfig) -> Result<Output, CliError> {
    if a.n == 0 {
        return Err(Error::BudgetExceeded("level must be positive".into()).into());
    }
    config.budget.check_level(a.n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut lines = Vec::new();
    let mut result = serde_json::Map::new();
    let mut failures: Vec<String> = Vec::new();
    let mut reports = Vec::new();
    if a.instance != InstanceChoice::Ap {
        reports.push(verify_simplicial_identities(
            &instance_fs1(),
            a.n,
            a.samples,
            &mut rng,
        ));
    }
    if a.instance != InstanceChoice::Fs1 {
        reports.push(verify_simplicial_identities(
            &instance_ap(),
            a.n,
            a.samples,
            &mut rng,
        ));
    }
    for r in &reports {
        lines.push(identity_line(r));
        if let Some(f) = r.failures.first() {
            failures.push(format!(
                "{}: level {} {} on {}",
                r.instance, f.level, f.identity, f.input
            ));
        }
    }
    result.insert("identities".into(), serde_json::to_value(&reports).unwrap());
    if a.instance == InstanceChoice::All {
        let th = theta_simplicial_check(a.n.min(4))?;
        lines.push(format!(
            "theta naturality (levels 1..={}): {} squares, {} failures",
            th.max_level,
            th.squares_checked,
            th.failures.len()
        ));
        if !th.passed() {
            failures.push(
                th.failures
                    .first()
                    .cloned()
                    .unwrap_or_else(|| "theta base case".into()),
            );
        }
        result.insert(
            "theta_simplicial".into(),
            serde_json::to_value(&th).unwrap(),
        );

        let mut residues = Vec::new();
        for n in 2..=(a.n + 1).min(5) {
            for w in relations_check(n)? {
                if !w.holds() {
                    residues.push(format!("n={n}: {} -> {}", w.instance.describe(), w.residue));
                }
            }
        }
        lines.push(format!(
            "infinitesimal braid relations (n<={}): {} nonzero residues",
            (a.n + 1).min(5),
            residues.len()
        ));
        failures.extend(residues.iter().cloned());
        result.insert("relation_failures".into(), json!(residues));

        let fs1 = instance_fs1();
        let mut cycles = 0;
        let mut brunnian_failures = Vec::new();
        for t in 1..=a.n.min(3) {
            for c in random_moore_cycles(&fs1, t, 20, 3, &mut rng)? {
                cycles += 1;
                if !theta_map(t, c.element())?.is_brunnian() {
                    brunnian_failures.push(c.to_string());
                }
            }
        }
        lines.push(format!(
            "random Moore cycles to Brunnian braids: {cycles} cycles, {} failures",
            brunnian_failures.len()
        ));
        failures.extend(
            brunnian_failures
                .iter()
                .map(|c| format!("theta({c}) is not Brunnian")),
        );
        result.insert(
            "brunnian".into(),
            json!({"cycles": cycles, "failures": brunnian_failures}),
        );

        let jac = jacobi_failures(a.samples, &mut rng)?;
        lines.push(format!(
            "Jacobi identity: {} random triples, {jac} failures",
            a.samples
        ));
        if jac > 0 {
            failures.push(format!("{jac} Jacobi failures"));
        }
        result.insert(
            "jacobi".into(),
            json!({"samples": a.samples, "failures": jac}),
        );
    }
    lines.push(if failures.is_empty() {
        "PASS".into()
    } else {
        "FAIL".into()
    });
    let mut out = Output::ok(lines.join("\n") + "\n", Value::Object(result));
    if let Some(f) = failures.first() {
        out.status = 1;
        out.failure = Some(format!("witness: {f}"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_code_contract() {
        let code = |e: Error| CliError::Engine(e).exit_code();
        assert_eq!(
            code(Error::Parse {
                pos: 0,
                msg: String::new()
            }),
            2
        );
        assert_eq!(code(Error::IndexOutOfRange { index: 4, bound: 3 }), 3);
        assert_eq!(code(Error::NotPure(vec![2, 1])), 3);
        assert_eq!(code(Error::BudgetExceeded(String::new())), 4);
        assert_eq!(code(Error::Internal(String::new())), 1);
        assert_eq!(CliError::Usage(String::new()).exit_code(), 2);
    }

    #[test]
    fn known_values_cover_certified_cells() {
        assert_eq!(known_value(1, 1), Some(AbelianInvariants::free(1)));
        assert_eq!(known_value(1, 6), Some(AbelianInvariants::trivial()));
        assert_eq!(known_value(2, 2), Some(AbelianInvariants::free(1)));
        assert_eq!(known_value(2, 4), None);
        assert_eq!(known_value(3, 1), None);
    }
}
