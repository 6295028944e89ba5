//! Command-line front end. Every subcommand builds a [`Report`]: a JSON
//! payload, optional tables for the TSV/Markdown emitters and a list of
//! failed checks. The exit code is 0 iff that list is empty.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{graded_dim_module, jtp_check, kernel_char_match, sf_characters, QSeries};
use crate::degeneracy::{classification_table, classify, divided_power_orders, extension_report};
use crate::error::{Error, Result};
use crate::freefield::FieldElement;
use crate::expr::{parse_momentum, parse_state, print_momentum, print_state};
use crate::lattice::{
    build_screening_lattices, conformal_dim, groundstates, num_simples, quadratic_form_f,
    quotient_group, Coset, Momentum, NamedModule, ScreeningLattices,
};
use crate::rational::fmt_rat;
use crate::rootdata::{build_root_system, Series};
use crate::screening::{module_kernel, short_screening_set};
use crate::vertexop::{residue_op, Residue, ResidueMode};
use crate::virasoro::commutator_check;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "lattice-voa", version, about = "Exact lattice vertex algebra computations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Markdown, global = true)]
    pub format: Format,
    /// Compare the JSON report with `<dir>/<name>.json`.
    #[arg(long, global = true)]
    pub golden_dir: Option<PathBuf>,
    /// With `--golden-dir`: write the golden file instead of comparing.
    #[arg(long, global = true)]
    pub bless: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
    Markdown,
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    /// `A1`, `B2`, `F4`, ... or a series with `n`, e.g. `Bn --n 3`.
    #[arg(long)]
    pub algebra: String,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 4)]
    pub ell: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lattices, Q, central charge and simple-module count.
    LatticeInfo(AlgebraArgs),
    /// Minimal-dimension representatives of every module.
    Groundstates(AlgebraArgs),
    /// Layer-wise screening kernels of a module.
    Kernel {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value = "blue")]
        module: String,
        #[arg(long, default_value_t = 1)]
        max_level: u32,
    },
    /// Residue of `Y(e^{φ_γ}) v` for a momentum `γ` and a state `v`.
    ScreenApply {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, allow_hyphen_values = true)]
        momentum: String,
        #[arg(long, allow_hyphen_values = true)]
        state: String,
        #[arg(long)]
        fractional: bool,
        #[arg(long, default_value_t = 8)]
        truncate: usize,
    },
    /// Graded dimensions of all modules; `--check-jtp` for the A1 identity.
    Characters {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long)]
        check_jtp: bool,
        /// Compare kernel layers with the symplectic fermion characters
        /// (`Bn`, ell = 4), this many levels deep.
        #[arg(long)]
        match_kernels: Option<u32>,
    },
    /// Symplectic fermion characters of `n` pairs.
    SfCharacters {
        #[arg(long, default_value_t = 1)]
        pairs: usize,
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// `(g0, g_ell)` classification and, where tabulated, the extension data.
    Degeneracy {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// Reproduce the whole classification table instead.
        #[arg(long)]
        table: bool,
    },
    /// Virasoro commutator identity on the layers of a module.
    VirasoroCheck {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value = "blue")]
        module: String,
        #[arg(long, default_value_t = 2)]
        max_mode: i64,
        #[arg(long, default_value_t = 2)]
        max_level: u32,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: &str, headers: &[&str]) -> Self {
        Table {
            title: title.into(),
            headers: headers.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    /// Golden-file stem.
    #[serde(skip)]
    pub name: String,
    pub data: Value,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub tables: Vec<Table>,
    /// Lines printed before the tables (verdicts, banners).
    #[serde(skip)]
    pub preamble: Vec<String>,
}

impl Report {
    fn new(command: &str, name: String, data: Value) -> Self {
        Report {
            schema: format!("lattice-voa/{command}/v{SCHEMA_VERSION}"),
            command: command.into(),
            name,
            data,
            failures: Vec::new(),
            tables: Vec::new(),
            preamble: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                out = serde_json::to_string_pretty(&self.to_json()).expect("json");
                out.push('\n');
            }
            Format::Tsv => {
                for l in &self.preamble {
                    let _ = writeln!(out, "# {l}");
                }
                for t in &self.tables {
                    let _ = writeln!(out, "# {}", t.title);
                    let _ = writeln!(out, "{}", t.headers.join("\t"));
                    for r in &t.rows {
                        let _ = writeln!(out, "{}", r.join("\t"));
                    }
                }
                if !self.failures.is_empty() {
                    let _ = writeln!(out, "# failures: {}", json!(self.failures));
                }
            }
            Format::Markdown => {
                for l in &self.preamble {
                    let _ = writeln!(out, "{l}\n");
                }
                for t in &self.tables {
                    let _ = writeln!(out, "### {}\n", t.title);
                    let _ = writeln!(out, "| {} |", t.headers.join(" | "));
                    let _ = writeln!(out, "|{}", "---|".repeat(t.headers.len()));
                    for r in &t.rows {
                        let _ = writeln!(out, "| {} |", r.join(" | "));
                    }
                    out.push('\n');
                }
                if self.failures.is_empty() {
                    out.push_str("all checks passed\n");
                } else {
                    let _ = writeln!(out, "FAILED: {}", json!(self.failures));
                }
            }
        }
        out
    }
}

/// Parses `A1`, `B2`, `Bn` (with `n`), `b3`.
pub fn parse_algebra(name: &str, n: Option<usize>) -> Result<(Series, usize)> {
    let name = name.trim();
    let bad = |reason: &str| Error::InvalidRootSystem {
        series: name.into(),
        rank: n.unwrap_or(0),
        reason: reason.into(),
    };
    let series: Series = name.get(..1).ok_or_else(|| bad("empty name"))?.parse()?;
    let rest = &name[1..];
    let rank = if rest.eq_ignore_ascii_case("n") || rest.is_empty() {
        n.ok_or_else(|| bad("rank missing; pass --n"))?
    } else {
        let r: usize = rest.parse().map_err(|_| bad("rank is not a number"))?;
        if n.is_some_and(|m| m != r) {
            return Err(bad("--n disagrees with the algebra name"));
        }
        r
    };
    Ok((series, rank))
}

fn lattices(a: &AlgebraArgs) -> Result<ScreeningLattices> {
    let (s, n) = parse_algebra(&a.algebra, a.n)?;
    build_screening_lattices(&build_root_system(s, n)?, a.ell)
}

fn stem(cmd: &str, sl: &ScreeningLattices, extra: &str) -> String {
    format!("{cmd}_{}_l{}{extra}", sl.rs.label(), sl.ell)
}

fn moms(v: &[Momentum]) -> Vec<String> {
    v.iter().map(print_momentum).collect()
}

fn module_coset(sl: &ScreeningLattices, name: &str) -> Result<(String, Coset)> {
    if let Ok(m) = name.parse::<NamedModule>() {
        return Ok((m.name().into(), sl.named_module(m)?));
    }
    let rep = parse_momentum(name, sl)?;
    Ok((print_momentum(&rep), sl.coset(&rep)))
}

/// Name of the coset if it is one of the named modules.
fn coset_name(sl: &ScreeningLattices, c: &Coset) -> Option<&'static str> {
    NamedModule::ALL
        .iter()
        .find(|m| sl.named_module(**m).is_ok_and(|x| x.contains(&c.rep)))
        .map(|m| m.name())
}

fn lattice_info(a: &AlgebraArgs) -> Result<Report> {
    let sl = lattices(a)?;
    let n = sl.rank();
    let hs: Vec<(String, String)> = (0..n)
        .map(|i| {
            (
                fmt_rat(&conformal_dim(&sl, &sl.basis_short[i])),
                fmt_rat(&conformal_dim(&sl, &sl.basis_long[i])),
            )
        })
        .collect();
    let qg = quotient_group(&sl.dual, &sl.long)?;
    let data = json!({
        "algebra": sl.rs.label(),
        "ell": sl.ell,
        "p": sl.p,
        "ambient_gram": sl.ambient.gram.to_rows().iter().map(|r| r.iter().map(fmt_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "q": print_momentum(&sl.q),
        "central_charge": fmt_rat(&sl.central_charge),
        "short_basis": moms(&sl.basis_short),
        "long_basis": moms(&sl.basis_long),
        "dual_basis": moms(&sl.basis_dual),
        "h_short": hs.iter().map(|h| h.0.clone()).collect::<Vec<_>>(),
        "h_long": hs.iter().map(|h| h.1.clone()).collect::<Vec<_>>(),
        "num_simples": num_simples(&sl.rs, sl.ell),
        "quotient_invariant_factors": qg.invariant_factors,
    });
    let mut r = Report::new("lattice-info", stem("lattice-info", &sl, ""), data);
    let mut t = Table::new("screening lattices", &["i", "short", "long", "dual", "h(short)", "h(long)"]);
    for i in 0..n {
        t.push(vec![
            (i + 1).to_string(),
            print_momentum(&sl.basis_short[i]),
            print_momentum(&sl.basis_long[i]),
            print_momentum(&sl.basis_dual[i]),
            hs[i].0.clone(),
            hs[i].1.clone(),
        ]);
    }
    let mut s = Table::new("summary", &["key", "value"]);
    s.push(vec!["Q".into(), print_momentum(&sl.q)]);
    s.push(vec!["c".into(), fmt_rat(&sl.central_charge)]);
    s.push(vec!["#simples".into(), num_simples(&sl.rs, sl.ell).to_string()]);
    s.push(vec!["quotient".into(), format!("{:?}", qg.invariant_factors)]);
    r.tables = vec![s, t];
    for (i, (hs_, hl)) in hs.iter().enumerate() {
        r.check(hs_ == "1", format!("h(short_{}) = {hs_}", i + 1));
        r.check(hl == "1", format!("h(long_{}) = {hl}", i + 1));
    }
    Ok(r)
}

fn groundstates_cmd(a: &AlgebraArgs) -> Result<Report> {
    let sl = lattices(a)?;
    let mut rows = Vec::new();
    let mut t = Table::new("groundstates", &["module", "rep", "count", "h", "F", "states"]);
    for c in sl.all_cosets() {
        let (pts, h) = groundstates(&sl, &c);
        let name = coset_name(&sl, &c).unwrap_or("");
        let f = quadratic_form_f(&sl, &c).to_string();
        t.push(vec![
            name.into(),
            print_momentum(&c.rep),
            pts.len().to_string(),
            fmt_rat(&h),
            f.clone(),
            moms(&pts).join("; "),
        ]);
        rows.push(json!({
            "module": name,
            "rep": print_momentum(&c.rep),
            "count": pts.len(),
            "h": fmt_rat(&h),
            "F": f,
            "states": moms(&pts),
        }));
    }
    let mut r = Report::new(
        "groundstates",
        stem("groundstates", &sl, ""),
        json!({"algebra": sl.rs.label(), "ell": sl.ell, "modules": rows}),
    );
    r.tables.push(t);
    Ok(r)
}

fn kernel_cmd(a: &AlgebraArgs, module: &str, max_level: u32) -> Result<Report> {
    let sl = lattices(a)?;
    let (name, coset) = module_coset(&sl, module)?;
    let scr = short_screening_set(&sl);
    let k = module_kernel(&sl, &coset, &scr, max_level, false)?;
    let triples: Vec<[usize; 3]> = k.rows.iter().map(|r| r.triple()).collect();
    let data = json!({
        "algebra": sl.rs.label(),
        "ell": sl.ell,
        "module": name,
        "screenings": moms(&k.screenings),
        "weyl_powers": k.weyl_powers,
        "h": k.rows.iter().map(|r| r.h.clone()).collect::<Vec<_>>(),
        "per_screening": k.rows.iter().map(|r| r.per_screening.clone()).collect::<Vec<_>>(),
        "rows": triples,
    });
    let mut r = Report::new("kernel", stem("kernel", &sl, &format!("_{name}_L{max_level}")), data);
    let mut t = Table::new(&format!("kernel layers of {name}"), &["h", "dim", "ker Z_i", "intersection"]);
    for row in &k.rows {
        let per: Vec<String> = row.per_screening.iter().map(|d| d.to_string()).collect();
        t.push(vec![
            row.h.clone(),
            row.dim.to_string(),
            per.join(","),
            row.intersection.to_string(),
        ]);
    }
    r.tables.push(t);
    Ok(r)
}

fn screen_apply(a: &AlgebraArgs, momentum: &str, state: &str, fractional: bool, k: usize) -> Result<Report> {
    let sl = lattices(a)?;
    let gamma = parse_momentum(momentum, &sl)?;
    let v = parse_state(state, &sl)?;
    let pairing = v
        .momenta()
        .iter()
        .map(|m| sl.ambient.pair(&gamma, m))
        .collect::<Vec<_>>();
    let integral = pairing.iter().all(|x| x.is_integer());
    let mode = if fractional {
        ResidueMode::Fractional { truncation: k }
    } else {
        ResidueMode::Integer
    };
    if !integral && !fractional {
        let bad = pairing.iter().find(|x| !x.is_integer()).expect("some fractional");
        return Err(Error::FractionalPairing { pairing: fmt_rat(bad) });
    }
    let stem_ = stem("screen-apply", &sl, "");
    let src = print_state(&v);
    match residue_op(&sl.ambient, &FieldElement::exp(gamma.clone()), &v, mode)? {
        Residue::Exact(out) => {
            let text = print_state(&out);
            let mut r = Report::new(
                "screen-apply",
                stem_,
                json!({"momentum": print_momentum(&gamma), "state": src, "result": text, "approximate": false}),
            );
            r.preamble.push(text);
            Ok(r)
        }
        Residue::Approximate(fr) => {
            let banner = format!(
                "APPROXIMATE: fractional residue truncated after {k} modes; omitted prefactors bounded by {:.3e}",
                fr.tail_prefactor_bound()
            );
            let terms: Vec<Value> = fr
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "mode": fmt_rat(&t.mode),
                        "prefactor": [t.prefactor.re, t.prefactor.im],
                        "state": print_state(&t.state),
                    })
                })
                .collect();
            let mut r = Report::new(
                "screen-apply",
                stem_,
                json!({
                    "momentum": print_momentum(&gamma),
                    "state": src,
                    "approximate": true,
                    "banner": banner,
                    "phase": fr.phase.to_string(),
                    "terms": terms,
                    "first_omitted_mode": fr.first_omitted_mode.map(|m| fmt_rat(&m)),
                }),
            );
            let mut t = Table::new("truncated residue", &["mode", "prefactor", "state"]);
            for x in &fr.terms {
                t.push(vec![
                    fmt_rat(&x.mode),
                    format!("{:.6}{:+.6}i", x.prefactor.re, x.prefactor.im),
                    print_state(&x.state),
                ]);
            }
            r.preamble.push(banner);
            r.tables.push(t);
            Ok(r)
        }
    }
}

fn series_cells(s: &QSeries) -> Vec<String> {
    s.coeffs.iter().map(fmt_rat).collect()
}

fn characters_cmd(a: &AlgebraArgs, order: usize, check_jtp: bool, match_kernels: Option<u32>) -> Result<Report> {
    let sl = lattices(a)?;
    let mut modules = Vec::new();
    let mut t = Table::new("graded dimensions", &["module", "rep", "offset", "step", "coefficients"]);
    for c in sl.all_cosets() {
        let s = graded_dim_module(&sl, &c, order);
        let name = coset_name(&sl, &c).unwrap_or("");
        t.push(vec![
            name.into(),
            print_momentum(&c.rep),
            fmt_rat(&s.offset),
            fmt_rat(&s.step),
            series_cells(&s).join(" "),
        ]);
        modules.push(json!({"module": name, "rep": print_momentum(&c.rep), "series": s.to_json()}));
    }
    let mut data = json!({"algebra": sl.rs.label(), "ell": sl.ell, "order": order, "modules": modules});
    let mut r = Report::new("characters", stem("characters", &sl, &format!("_o{order}")), Value::Null);
    if check_jtp {
        if !(sl.rs.series == Series::A && sl.rank() == 1 && sl.ell == 4) {
            return Err(Error::Unsupported("--check-jtp is the A1, ell = 4 identity".into()));
        }
        let j = jtp_check(order)?;
        let verdict = if j.matches { "MATCH" } else { "MISMATCH" };
        data["jtp"] = json!({"verdict": verdict, "vacuum": j.vacuum, "chi_ns_plus": j.chi_ns_plus});
        r.preamble.push(verdict.into());
        r.check(j.matches, "vacuum graded dimension differs from chi_ns+");
    }
    if let Some(levels) = match_kernels {
        if !(sl.rs.series == Series::B && sl.ell == 4) {
            return Err(Error::Unsupported("--match-kernels needs Bn at ell = 4".into()));
        }
        let m = kernel_char_match(sl.rank(), levels, order)?;
        let mut mt = Table::new("kernels vs characters", &["name", "module", "offset", "kernel", "chi", "match"]);
        for row in &m.rows {
            mt.push(vec![
                row.name.clone(),
                row.module.clone(),
                row.offset.clone(),
                format!("{:?}", row.kernel_dims),
                format!("{:?}", row.chi_coeffs),
                row.matches.to_string(),
            ]);
            r.check(row.matches, format!("{} kernel layers differ from its character", row.name));
        }
        r.check(m.vacuum_sum_matches, "2^(n-1)(chi1+chi2) differs from the vacuum module");
        data["kernel_match"] = serde_json::to_value(&m).expect("json");
        r.tables.push(mt);
    }
    r.data = data;
    r.tables.insert(0, t);
    Ok(r)
}

fn sf_cmd(pairs: usize, order: usize) -> Result<Report> {
    let s = sf_characters(pairs, order)?;
    let named = [
        ("chi_ns+", &s.ns_plus),
        ("chi_ns-", &s.ns_minus),
        ("chi_r+", &s.r_plus),
        ("chi_r-", &s.r_minus),
        ("chi1", &s.chi[0]),
        ("chi2", &s.chi[1]),
        ("chi3", &s.chi[2]),
        ("chi4", &s.chi[3]),
    ];
    let mut t = Table::new(&format!("symplectic fermion characters, {pairs} pairs"), &["name", "offset", "step", "coefficients"]);
    let mut data = serde_json::Map::new();
    for (k, v) in named {
        t.push(vec![k.into(), fmt_rat(&v.offset), fmt_rat(&v.step), series_cells(v).join(" ")]);
        data.insert(k.into(), v.to_json());
    }
    let mut r = Report::new(
        "sf-characters",
        format!("sf-characters_n{pairs}_o{order}"),
        json!({"pairs": pairs, "order": order, "series": data}),
    );
    r.tables.push(t);
    Ok(r)
}

fn degeneracy_cmd(a: &AlgebraArgs, table: bool) -> Result<Report> {
    if table {
        let rows = classification_table()?;
        let mut t = Table::new("classification", &["g", "ell", "case", "g0", "g_ell", "table g0", "table g_ell", "match"]);
        for x in &rows {
            t.push(vec![
                x.g.clone(),
                x.ell.to_string(),
                format!("{:?}", x.case),
                if x.computed { x.g0.clone() } else { "not computed".into() },
                x.gell.clone(),
                x.table_g0.clone(),
                x.table_gell.clone(),
                x.matches.to_string(),
            ]);
        }
        let mut r = Report::new("degeneracy", "degeneracy_table".into(), json!({"rows": rows}));
        for x in &rows {
            r.check(x.matches, format!("{} at ell = {}", x.g, x.ell));
        }
        r.tables.push(t);
        return Ok(r);
    }
    let (s, n) = parse_algebra(&a.algebra, a.n)?;
    let rs = build_root_system(s, n)?;
    let cl = classify(&rs, a.ell)?;
    let mut data = json!({
        "algebra": rs.label(),
        "ell": a.ell,
        "divided_power_orders": divided_power_orders(&rs, a.ell),
        "case": cl.case,
        "g0": if cl.computed { json!(cl.g0.to_string()) } else { Value::Null },
        "g0_table": cl.g0.to_string(),
        "g_ell": cl.gell.to_string(),
        "computed": cl.computed,
    });
    let mut t = Table::new("classification", &["key", "value"]);
    t.push(vec!["case".into(), format!("{:?}", cl.case)]);
    t.push(vec![
        "g0".into(),
        if cl.computed {
            cl.g0.to_string()
        } else {
            format!("{} (table value; not computed)", cl.g0)
        },
    ]);
    t.push(vec!["g_ell".into(), cl.gell.to_string()]);
    t.push(vec!["ell_alpha".into(), format!("{:?}", divided_power_orders(&rs, a.ell))]);
    let mut r = Report::new("degeneracy", format!("degeneracy_{}_l{}", rs.label(), a.ell), Value::Null);
    if let Ok(ext) = extension_report(&rs, a.ell) {
        t.push(vec!["#simples".into(), format!("{} = {} x {}", ext.num_simples, ext.simples_factors.0, ext.simples_factors.1)]);
        t.push(vec!["g0 theory".into(), format!("{} with {} simples", ext.table_g0_theory, ext.g0_num_simples)]);
        t.push(vec!["dim X".into(), ext.dim_x.to_string()]);
        t.push(vec!["c".into(), ext.central_charge.clone()]);
        t.push(vec!["c (table formula)".into(), ext.table_central_charge.clone()]);
        t.push(vec!["global symmetry".into(), ext.global_symmetry.clone()]);
        r.check(
            ext.dim_x_from_counts == Some(ext.dim_x),
            "dim X from the determinant ratio disagrees with the simple-module counts",
        );
        r.check(
            ext.num_simples as i128 == ext.quotient_order as i128,
            "simple-module count disagrees with the quotient group order",
        );
        if !ext.central_charge_agrees {
            r.preamble.push(format!(
                "NOTE: central charge {} differs from the table formula {}",
                ext.central_charge, ext.table_central_charge
            ));
        }
        data["extension"] = serde_json::to_value(&ext).expect("json");
    }
    r.data = data;
    r.tables.push(t);
    Ok(r)
}

fn virasoro_cmd(a: &AlgebraArgs, module: &str, max_mode: i64, max_level: u32) -> Result<Report> {
    let sl = lattices(a)?;
    let (name, coset) = module_coset(&sl, module)?;
    let rep = commutator_check(&sl, &coset, max_mode, max_level)?;
    let mut t = Table::new("virasoro commutators", &["c", "max mode", "layer dims", "checks", "failures"]);
    t.push(vec![
        rep.central_charge.clone(),
        max_mode.to_string(),
        format!("{:?}", rep.layer_dims),
        rep.checks.to_string(),
        rep.failures.len().to_string(),
    ]);
    let mut r = Report::new(
        "virasoro-check",
        stem("virasoro-check", &sl, &format!("_{name}_m{max_mode}_L{max_level}")),
        serde_json::to_value(&rep).expect("json"),
    );
    for f in &rep.failures {
        r.failures.push(format!("[L_{}, L_{}] at h = {} on {}", f.m, f.n, f.h, f.state));
    }
    r.tables.push(t);
    Ok(r)
}

/// Builds the report for a parsed command.
pub fn build_report(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::LatticeInfo(a) => lattice_info(a),
        Command::Groundstates(a) => groundstates_cmd(a),
        Command::Kernel { alg, module, max_level } => kernel_cmd(alg, module, *max_level),
        Command::ScreenApply {
            alg,
            momentum,
            state,
            fractional,
            truncate,
        } => screen_apply(alg, momentum, state, *fractional, *truncate),
        Command::Characters {
            alg,
            order,
            check_jtp,
            match_kernels,
        } => characters_cmd(alg, *order, *check_jtp, *match_kernels),
        Command::SfCharacters { pairs, order } => sf_cmd(*pairs, *order),
        Command::Degeneracy { alg, table } => degeneracy_cmd(alg, *table),
        Command::VirasoroCheck {
            alg,
            module,
            max_mode,
            max_level,
        } => virasoro_cmd(alg, module, *max_mode, *max_level),
    }
}

/// Outcome of one invocation: exit code, standard output, standard error.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn golden(report: &mut Report, out: &OutputArgs) -> std::io::Result<()> {
    let Some(dir) = &out.golden_dir else {
        return Ok(());
    };
    let path = dir.join(format!("{}.json", report.name));
    let mut value = report.to_json();
    value["failures"] = json!([]);
    if out.bless {
        std::fs::create_dir_all(dir)?;
        std::fs::write(&path, serde_json::to_string_pretty(&value)? + "\n")?;
        return Ok(());
    }
    match std::fs::read_to_string(&path) {
        Ok(text) => {
            let want: Value = serde_json::from_str(&text)?;
            if want != value {
                report.failures.push(format!("output differs from golden file {}", path.display()));
            }
        }
        Err(_) => report.failures.push(format!("missing golden file {}", path.display())),
    }
    Ok(())
}

pub fn run(cli: &Cli) -> Outcome {
    match build_report(&cli.command) {
        Ok(mut report) => {
            if let Err(e) = golden(&mut report, &cli.output) {
                return Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: format!("error: golden file: {e}\n"),
                };
            }
            let stderr = if report.passed() {
                String::new()
            } else {
                format!("{}\n", json!({"failures": report.failures}))
            };
            Outcome {
                code: if report.passed() { 0 } else { 1 },
                stdout: report.render(cli.output.format),
                stderr,
            }
        }
        Err(e) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("{}\n", json!({"error": e.to_string()})),
        },
    }
}

/// Parses and runs an argument vector (first element is the program name).
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            code: if e.use_stderr() { 2 } else { 0 },
            stdout: if e.use_stderr() { String::new() } else { e.to_string() },
            stderr: if e.use_stderr() { e.to_string() } else { String::new() },
        },
    }
}
