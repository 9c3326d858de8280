//! The `semiclass` command line: one JSON report on stdout, a short summary
//! on stderr. Exit 0 on success, 1 on input errors, 2 when `selftest` fails.

use std::fs;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bialgebra::{
    cobracket_from_r, cocycle_residual, cojacobi_residual, cybe_residual, n_tensor, preset_r,
    schouten, RMatrix,
};
use crate::chart::{Chart, FormField};
use crate::error::{Error, Result};
use crate::json::{
    form_value, parse_algebra, parse_chart, parse_xihat, poly_tensor_value, rtensor_value,
    su2_value, tensor_value,
};
use crate::lie::{preset_algebra, LieAlgebra, PRESETS};
use crate::moduli::moduli_dimension;
use crate::poly::MultiPoly;
use crate::preconnection::{
    bicovariance_residual, canonical_xi, compatibility_residual, hat_from_xi, j1_obstruction,
    su2_3d_xi, symmetry_residual, thhh_residual, Xi, XiHat,
};
use crate::rational::parse_rational;
use crate::report::Report;
use crate::su2::{
    curvature_action_su2, gamma_from_xi_su2, poisson_su2, poisson_tensor_su2, su2_data,
    torsion_pair_su2, InvariantOneForm, Sl2, Su2Poly,
};
use crate::tensor::Tensor;
use crate::verify::{run_suite, suite_report};

#[derive(Parser, Debug)]
#[command(name = "semiclass", version, about = "Exact checks for semiclassical differential calculi")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Classical Yang-Baxter residual of a preset or an algebra file with `r`
    CheckCybe { source: String },
    /// Cobracket of the stored r-matrix with its cocycle and co-Jacobi residuals
    Cobracket { preset: String },
    /// Canonical preconnection and its residuals
    Canonical { preset: String },
    /// Curvature obstruction for a given Xi-hat (zero by default)
    J1 {
        preset: String,
        #[arg(long)]
        xihat: Option<String>,
    },
    /// Dimension and basis of the ad-invariant Xi-hat space
    ModuliDim { preset: String },
    /// Every chart residual for a chart file
    ChartReport { file: String },
    /// Poisson table and calculus data on SU(2)
    Su2Report {
        /// `canonical` or `3d:<rational>`
        #[arg(long, default_value = "canonical")]
        xi: String,
    },
    /// The full acceptance suite
    Selftest,
}

/// What a run produced; the binary prints and exits with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::{DisplayHelp, DisplayVersion};
            let text = e.render().to_string();
            return if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            } else {
                Outcome { code: 1, stdout: String::new(), stderr: text }
            };
        }
    };
    let command: Vec<String> = argv.iter().skip(1).cloned().collect();
    match dispatch(cli.command, command) {
        Ok((report, fail)) => {
            let stderr = summary(&report);
            Outcome { code: if fail { 2 } else { 0 }, stdout: report.to_json(), stderr }
        }
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn summary(r: &Report) -> String {
    let mut s = String::new();
    for e in &r.results {
        let tag = match (e.is_zero, e.pass) {
            (Some(true), _) => "zero",
            (Some(false), _) => "nonzero",
            (_, Some(true)) => "pass",
            (_, Some(false)) => "FAIL",
            _ => "value",
        };
        s += &format!("{tag:>8}  {}\n", e.name);
    }
    s
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read `{path}`: {e}")))
}

fn preset(name: &str) -> Result<(LieAlgebra, Vec<u8>)> {
    Ok((preset_algebra(name)?, name.as_bytes().to_vec()))
}

fn residual(rep: &mut Report, name: &str, t: &Tensor) {
    rep.residual(name, t.is_zero(), tensor_value(t));
}

fn dispatch(cmd: Cmd, command: Vec<String>) -> Result<(Report, bool)> {
    let mut fail = false;
    let rep = match cmd {
        Cmd::CheckCybe { source } => {
            let (g, r, input) = if PRESETS.contains(&source.as_str()) {
                let g = preset_algebra(&source)?;
                let r = preset_r(&g)?;
                (g, r, source.into_bytes())
            } else {
                let text = read(&source)?;
                let (g, r) = parse_algebra(&text)?;
                let r = r.ok_or_else(|| Error::Invalid(format!("`{source}` has no `r` field")))?;
                (g, r, text.into_bytes())
            };
            let mut rep = Report::new(command, &[&input]);
            check_cybe(&mut rep, &g, &r)?;
            rep
        }
        Cmd::Cobracket { preset: name } => {
            let (g, input) = preset(&name)?;
            let delta = cobracket_from_r(&g, &preset_r(&g)?)?;
            let mut rep = Report::new(command, &[&input]);
            rep.value("delta", tensor_value(&delta.value));
            residual(&mut rep, "cocycle_residual", &cocycle_residual(&g, &delta)?);
            residual(&mut rep, "cojacobi_residual", &cojacobi_residual(&g, &delta)?);
            rep
        }
        Cmd::Canonical { preset: name } => {
            let (g, input) = preset(&name)?;
            let r = preset_r(&g)?;
            let xi = canonical_xi(&g, &r);
            let hat = hat_from_xi(&g, &xi, &r)?;
            let mut rep = Report::new(command, &[&input]);
            rep.value("xi", tensor_value(&xi.value));
            residual(&mut rep, "xihat", &hat.value);
            residual(&mut rep, "compatibility_residual", &compatibility_residual(&xi, &cobracket_from_r(&g, &r)?)?);
            residual(&mut rep, "symmetry_residual", &symmetry_residual(&hat)?);
            residual(&mut rep, "bicovariance_residual", &bicovariance_residual(&hat, &g)?);
            rep
        }
        Cmd::J1 { preset: name, xihat } => {
            let (g, input) = preset(&name)?;
            let r = preset_r(&g)?;
            let (hat, file) = match &xihat {
                Some(path) => {
                    let text = read(path)?;
                    (parse_xihat(&text, &g)?, text.into_bytes())
                }
                None => (XiHat { value: Tensor::zeros(3, g.dim()) }, Vec::new()),
            };
            let mut rep = Report::new(command, &[&input, &file]);
            residual(&mut rep, "bicovariance_residual", &bicovariance_residual(&hat, &g)?);
            residual(&mut rep, "j1_obstruction", &j1_obstruction(&g, &hat, &r)?);
            residual(&mut rep, "thhh_residual", &thhh_residual(&g, &hat, &r)?);
            rep
        }
        Cmd::ModuliDim { preset: name } => {
            let (g, input) = preset(&name)?;
            let res = moduli_dimension(&g);
            let mut rep = Report::new(command, &[&input]);
            rep.value("algebra", json!(res.algebra));
            rep.value("dimension", json!(res.dimension));
            rep.value("basis", Value::Array(res.basis.iter().map(|b| tensor_value(&b.value)).collect()));
            rep
        }
        Cmd::ChartReport { file } => {
            let text = read(&file)?;
            let chart = parse_chart(&text)?;
            let mut rep = Report::new(command, &[text.as_bytes()]);
            chart_report(&mut rep, &chart)?;
            rep
        }
        Cmd::Su2Report { xi } => {
            let (label, xi_t) = su2_xi(&xi)?;
            let mut rep = Report::new(command, &[label.as_bytes()]);
            su2_report(&mut rep, &xi_t)?;
            rep
        }
        Cmd::Selftest => {
            let criteria = run_suite();
            fail = criteria.iter().any(|c| !c.pass);
            suite_report(&criteria, command)
        }
    };
    Ok((rep, fail))
}

fn check_cybe(rep: &mut Report, g: &LieAlgebra, r: &RMatrix) -> Result<()> {
    residual(rep, "jacobi_residual", &g.jacobi_residual());
    residual(rep, "cybe_residual", &cybe_residual(g, r)?);
    let rp = r.plus();
    residual(rep, "r_plus_ad_invariance", &g.ad_invariance_residual(&rp));
    residual(rep, "n_plus_schouten_r_plus", &n_tensor(g, r)?.add(&schouten(g, &rp, &rp)?)?);
    Ok(())
}

fn poly_residual(rep: &mut Report, name: &str, t: &crate::chart::PolyTensor) {
    rep.residual(name, t.is_zero(), poly_tensor_value(t));
}

fn basis_form(c: &Chart, i: usize) -> FormField {
    let mut v = vec![MultiPoly::zero(c.vars()); c.n()];
    v[i] = MultiPoly::one(c.vars());
    FormField::one_form(v)
}

fn chart_report(rep: &mut Report, c: &Chart) -> Result<()> {
    poly_residual(rep, "jacobi_residual", &c.jacobi_residual());
    poly_residual(rep, "compatibility_residual", &c.compatibility_residual());
    poly_residual(rep, "torsion", &c.torsion());
    poly_residual(rep, "curvature", &c.curvature());
    poly_residual(rep, "nabla_omega", &c.nabla_omega());
    poly_residual(rep, "nabla_omega_residual", &c.nabla_omega_residual());
    match c.centrality_predicate() {
        Ok(b) => rep.value("centrality", json!(b)),
        Err(Error::MissingOmegaLower) => rep.value("centrality", Value::Null),
        Err(e) => return Err(e),
    }
    poly_residual(rep, "n_tensor", &c.n_tensor_field());
    poly_residual(rep, "e_tensor", &c.e_tensor_field());
    poly_residual(rep, "e_constancy_residual", &c.e_constancy_residual());
    if c.omega_lower().is_some() {
        let b = c.braiding()?;
        for i in 0..c.n() {
            for j in 0..c.n() {
                let t = b.rho(&basis_form(c, i), &basis_form(c, j))?;
                rep.residual(format!("rho(dx{}, dx{})", i + 1, j + 1), t.is_zero(), rtensor_value(&t, c));
            }
        }
    }
    // coordinates and their pairwise products as test functions
    let mut funcs: Vec<MultiPoly> = (0..c.n()).map(|i| c.coordinate(i)).collect();
    for i in 0..c.n() {
        let p = &c.coordinate(i) * &c.coordinate((i + 1) % c.n());
        if !funcs.contains(&p) {
            funcs.push(p);
        }
    }
    let names: Vec<String> = funcs.iter().map(ToString::to_string).collect();
    for i in 0..funcs.len() {
        for j in i + 1..funcs.len() {
            for k in j + 1..funcs.len() {
                let t = c.torsion_cyclic_residual(&funcs[i], &funcs[j], &funcs[k])?;
                rep.residual(
                    format!("torsion_cyclic({}, {}, {})", names[i], names[j], names[k]),
                    t.is_zero(),
                    json!(t.to_string()),
                );
            }
        }
    }
    Ok(())
}

fn su2_xi(arg: &str) -> Result<(String, Xi)> {
    let s = su2_data();
    if arg == "canonical" {
        return Ok(("canonical".into(), canonical_xi(&s.algebra, &s.r)));
    }
    let lam = arg
        .strip_prefix("3d:")
        .ok_or_else(|| Error::Invalid(format!("--xi expects `canonical` or `3d:<rational>`, got `{arg}`")))?;
    let l = parse_rational(lam)?;
    Ok((format!("3d:{}", crate::rational::format_rational(&l)), su2_3d_xi(&s.algebra, &l)?))
}

fn su2_report(rep: &mut Report, xi: &Xi) -> Result<()> {
    let gens = Su2Poly::generators();
    let names = ["a", "b", "c", "d"];
    let mut table = serde_json::Map::new();
    for i in 0..4 {
        for j in i + 1..4 {
            table.insert(format!("{{{},{}}}", names[i], names[j]), su2_value(&poisson_su2(&gens[i], &gens[j])));
        }
    }
    rep.value("poisson_table", Value::Object(table));
    let om = poisson_tensor_su2();
    rep.value(
        "poisson_tensor",
        Value::Array(om.iter().map(|row| Value::Array(row.iter().map(su2_value).collect())).collect()),
    );
    let forms = Sl2::ALL.map(InvariantOneForm::basis);
    let mut gamma = serde_json::Map::new();
    for (x, xn) in gens.iter().zip(names) {
        for (tau, v) in forms.iter().zip(Sl2::ALL) {
            gamma.insert(format!("gamma({xn}, tau{})", &v.name()[1..]), form_value(&gamma_from_xi_su2(xi, x, tau)?));
        }
    }
    rep.value("gamma", Value::Object(gamma));
    for (i, x) in gens.iter().enumerate() {
        for j in i + 1..4 {
            for (tau, v) in forms.iter().zip(Sl2::ALL) {
                let r = curvature_action_su2(xi, x, &gens[j], tau)?;
                rep.residual(
                    format!("curvature({}, {}, tau{})", names[i], names[j], &v.name()[1..]),
                    r.is_zero(),
                    form_value(&r),
                );
            }
        }
    }
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                if i == j || j == k || i == k {
                    continue;
                }
                let t = torsion_pair_su2(xi, &gens[i], &gens[j], &gens[k])?;
                rep.residual(format!("torsion({}, {}, {})", names[i], names[j], names[k]), t.is_zero(), su2_value(&t));
            }
        }
    }
    Ok(())
}
