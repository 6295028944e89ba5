//! One PASS/FAIL line per acceptance criterion.
//!
//! Expected values are either pinned from the published tables or produced
//! here by an independent route (direct expansion, determinant ratio,
//! dimension counting). A failure listed in `RECORDED` is a known
//! discrepancy with the published data and does not change the exit code;
//! any other failure does.

mod common;

use std::time::{Duration, Instant};

use common::{evaluate, lattices, props, Row, A1_LONG, A1_SHORT, B2_BLUE, B2_GREEN};
use lattice_voa::characters::{graded_dim_module, jtp_check, kernel_char_match, sf_characters, QSeries};
use lattice_voa::degeneracy::{classification_table, extension_report, Case};
use lattice_voa::freefield::FieldElement;
use lattice_voa::lattice::{
    build_screening_lattices, conformal_dim, groundstates, num_simples, quotient_group, Momentum, NamedModule,
    ScreeningLattices,
};
use lattice_voa::rational::{int, rat, Rational};
use lattice_voa::rootdata::{build_root_system, Series};
use lattice_voa::screening::layers::layer_basis;
use lattice_voa::screening::{long_screening_suite, module_kernel, nichols_check, short_screening_set};
use lattice_voa::vertexop::VertexEngine;
use lattice_voa::virasoro::{commutator_check, stress_tensor};
use num_traits::Zero;
use proptest::strategy::Strategy;
use proptest::test_runner::{Config, TestRunner};

/// Property cases per suite.
const CASES: u32 = 128;
/// Wall-clock bound for the kernel tables.
const KERNEL_BUDGET: Duration = Duration::from_secs(30);

/// Criteria whose failure is a recorded discrepancy with the published data.
const RECORDED: &[u32] = &[3, 5, 9];

type Outcome = (Vec<String>, String);
type Criterion = (&'static str, fn() -> Outcome);
/// Name, lattices, then the published short, long and dual bases and `Q`.
type LatticeCase = (String, ScreeningLattices, Vec<Momentum>, Vec<Momentum>, Vec<Momentum>, Momentum);
/// Series, rank, ℓ, #simples, dim X, #simples of the subsystem, c, global symmetry.
type ExtensionRow = (Series, usize, i64, i64, i64, i64, Rational, &'static str);

struct Harness {
    unexpected: Vec<u32>,
}

impl Harness {
    fn report(&mut self, n: u32, name: &str, fails: &[String], ok_detail: String) {
        if fails.is_empty() {
            println!("PASS {n:>2} {name}: {ok_detail}");
        } else if RECORDED.contains(&n) {
            println!("FAIL {n:>2} {name}: {} (recorded deviation)", fails.join("; "));
        } else {
            println!("FAIL {n:>2} {name}: {}", fails.join("; "));
            self.unexpected.push(n);
        }
    }
}

fn r(n: i128, d: i128) -> Rational {
    rat(n, d)
}

fn mom(v: &[Rational]) -> Momentum {
    Momentum(v.to_vec())
}

fn unit(n: usize, i: usize) -> Momentum {
    Momentum::unit(n, i)
}

fn sl_of(s: Series, n: usize, ell: i64) -> ScreeningLattices {
    build_screening_lattices(&build_root_system(s, n).unwrap(), ell).unwrap()
}

/// `α_{k…n}⊖ = e_k + … + e_n` (0-based `k`).
fn tail(n: usize, k: usize) -> Momentum {
    let mut v = Momentum::zero(n);
    for i in k..n {
        v = v.add(&unit(n, i));
    }
    v
}

/// Published lattice data for `B_n, ℓ=4` in the basis `e_i = α_i/√2`.
fn bn_published(n: usize) -> (Vec<Momentum>, Vec<Momentum>, Vec<Momentum>, Momentum) {
    let short = (0..n).map(|i| unit(n, i).neg()).collect();
    let long = (0..n)
        .map(|i| if i + 1 == n { unit(n, i).scale(int(2)) } else { unit(n, i) })
        .collect();
    let mut dual: Vec<Momentum> = (1..n)
        .map(|i| mom(&(1..=n).map(|j| int(j.min(i) as i128)).collect::<Vec<_>>()))
        .collect();
    let q = mom(&(1..=n).map(|j| r(j as i128, 2)).collect::<Vec<_>>());
    dual.push(q.clone());
    (short, long, dual, q)
}

fn c1_lattice_data() -> Outcome {
    let mut fails = Vec::new();
    let mut cases: Vec<LatticeCase> = vec![(
        "A1".into(),
        lattices(Series::A, 1),
        vec![mom(&[int(-1)])],
        vec![mom(&[int(2)])],
        vec![mom(&[r(1, 2)])],
        mom(&[r(1, 2)]),
    )];
    for n in 2..=4 {
        let (s, l, d, q) = bn_published(n);
        cases.push((format!("B{n}"), lattices(Series::B, n), s, l, d, q));
    }
    for (name, sl, s, l, d, q) in &cases {
        for (what, got, want) in [
            ("short basis", &sl.basis_short, s),
            ("long basis", &sl.basis_long, l),
            ("dual basis", &sl.basis_dual, d),
        ] {
            if got != want {
                fails.push(format!("{name} {what}"));
            }
        }
        if &sl.q != q {
            fails.push(format!("{name} Q = {}", sl.q));
        }
        for b in sl.basis_short.iter().chain(&sl.basis_long) {
            if conformal_dim(sl, b) != int(1) {
                fails.push(format!("{name} h({b}) != 1"));
            }
        }
    }
    (fails, "A1, B2, B3, B4 bases, Q and h = 1 exact".into())
}

fn c2_central_charges() -> Outcome {
    let mut fails = Vec::new();
    let mut seen = Vec::new();
    let mut cases = vec![(Series::A, 1usize, int(-2))];
    cases.extend((2..=4).map(|n| (Series::B, n, int(-2 * n as i128))));
    for (s, n, want) in cases {
        let c = lattices(s, n).central_charge;
        seen.push(format!("{s}{n}:{c}"));
        if c != want {
            fails.push(format!("{s}{n}: c = {c}, want {want}"));
        }
    }
    (fails, seen.join(" "))
}

fn c3_simple_counts() -> Outcome {
    let mut fails = Vec::new();
    for p in 2..=6i64 {
        let sl = sl_of(Series::A, 1, 2 * p);
        let q = quotient_group(&sl.dual, &sl.long).unwrap();
        if q.order() != 2 * p as i128 || num_simples(&sl.rs, 2 * p) != 2 * p {
            fails.push(format!("A1 ell={}: {}", 2 * p, q.order()));
        }
    }
    let mut groups = Vec::new();
    for n in 2..=4 {
        let sl = lattices(Series::B, n);
        let q = quotient_group(&sl.dual, &sl.long).unwrap();
        groups.push(format!("B{n}:{:?}", q.invariant_factors));
        if q.order() != 4 || num_simples(&sl.rs, 4) != 4 {
            fails.push(format!("B{n}: order {}", q.order()));
        }
        if !q.is_cyclic() {
            fails.push(format!("B{n}: quotient is Z2 x Z2, not Z4"));
        }
    }
    (fails, format!("A1 ell=4..12 -> ell; Bn -> 4, cyclic; {}", groups.join(" ")))
}

fn sorted(mut v: Vec<Momentum>) -> Vec<Momentum> {
    v.sort();
    v
}

fn c4_groundstates() -> Outcome {
    let mut fails = Vec::new();
    let order = [NamedModule::Blue, NamedModule::Center, NamedModule::Green, NamedModule::Steinberg];
    let mut check = |name: &str, sl: &ScreeningLattices, want: [(Vec<Momentum>, Rational); 4]| {
        for (m, (set, h)) in order.iter().zip(want) {
            let (g, h0) = groundstates(sl, &sl.named_module(*m).unwrap());
            if sorted(g.clone()) != sorted(set.clone()) || h0 != h {
                fails.push(format!("{name} {}: {} states at h = {h0}", m.name(), g.len()));
            }
        }
    };
    let m2 = |a: i128, b: i128, c: i128, d: i128| mom(&[r(a, b), r(c, d)]);
    check(
        "A1",
        &lattices(Series::A, 1),
        [
            (vec![mom(&[int(0)])], int(0)),
            (vec![mom(&[r(1, 2)])], r(-1, 8)),
            (vec![mom(&[int(1)])], int(0)),
            (vec![mom(&[r(-1, 2)]), mom(&[r(3, 2)])], r(3, 8)),
        ],
    );
    check(
        "B2",
        &lattices(Series::B, 2),
        [
            (vec![m2(0, 1, 0, 1), m2(1, 1, 2, 1)], int(0)),
            (vec![m2(1, 2, 1, 1)], r(-1, 4)),
            (vec![m2(1, 1, 1, 1), m2(0, 1, 1, 1)], int(0)),
            (vec![m2(3, 2, 2, 1), m2(1, 2, 0, 1), m2(-1, 2, 0, 1), m2(1, 2, 2, 1)], r(1, 4)),
        ],
    );
    for n in 2..=4usize {
        let sl = lattices(Series::B, n);
        let mut blue = Vec::new();
        let mut green = Vec::new();
        for mask in 0u32..(1 << n) {
            let mut v = sl.q.clone();
            for k in 0..n {
                let s = if mask >> k & 1 == 1 { r(-1, 2) } else { r(1, 2) };
                v = v.add(&tail(n, k).scale(s));
            }
            // In Λ⊕ iff the number of minus signs has the parity of n.
            if mask.count_ones() as usize % 2 == n % 2 { blue.push(v) } else { green.push(v) }
        }
        let stein: Vec<Momentum> =
            (0..n).flat_map(|k| [sl.q.add(&tail(n, k)), sl.q.sub(&tail(n, k))]).collect();
        let n8 = r(n as i128, 8);
        let want = [(blue, int(0)), (vec![sl.q.clone()], -n8), (green, int(0)), (stein, -n8 + r(1, 2))];
        check(&format!("B{n}"), &sl, want);
    }
    (fails, "A1, B2 tables; B2..B4 sign-vector sets, counts and h exact".into())
}

fn c5_screening_golden() -> Outcome {
    let mut fails = Vec::new();
    let mut printed_off = 0;
    let mut total = 0;
    let a1 = lattices(Series::A, 1);
    let b2 = lattices(Series::B, 2);
    let a1_short = short_screening_set(&a1);
    let a1_long = vec![a1.basis_long[0].clone()];
    let b2_short = short_screening_set(&b2);
    let blocks: [(&str, &ScreeningLattices, &[Momentum], &[Row]); 4] = [
        ("A1 short", &a1, &a1_short, A1_SHORT),
        ("A1 long", &a1, &a1_long, A1_LONG),
        ("B2 blue", &b2, &b2_short, B2_BLUE),
        ("B2 green", &b2, &b2_short, B2_GREEN),
    ];
    for (name, sl, z, rows) in blocks {
        for (k, row) in rows.iter().enumerate() {
            let o = evaluate(sl, z, row);
            total += 1;
            if !o.matches_expected {
                fails.push(format!("{name} row {k} wrong"));
            }
            if !o.matches_printed {
                printed_off += 1;
            }
        }
    }
    let t = stress_tensor(&a1).element;
    let screener = lattice_voa::screening::Screener::new(&a1.ambient, vec![a1_short[0].clone(), a1_long[0].clone()]);
    for i in 0..2 {
        if !screener.apply(i, &t).unwrap().is_zero() {
            fails.push(format!("A1 Z{i}(T) != 0"));
        }
    }
    let trip = long_screening_suite(&a1).unwrap().triplet.unwrap();
    if trip.h != "3" || !trip.cube_vanishes || trip.in_short_kernel != [true; 3] {
        fails.push("A1 triplet orbit".into());
    }
    if printed_off > 0 {
        fails.push(format!(
            "{printed_off} of {total} printed values disagree with the exact residue (corrected values reproduced)"
        ));
    }
    (fails, format!("{total} evaluations, Z(T) = 0, triplet orbit at h = 3"))
}

fn c6_kernels() -> Outcome {
    let start = Instant::now();
    let mut fails = Vec::new();
    let sl = lattices(Series::B, 2);
    let z = short_screening_set(&sl);
    let want = [
        (NamedModule::Blue, [[2, 1, 1], [8, 4, 0]]),
        (NamedModule::Green, [[2, 1, 0], [8, 4, 4]]),
        (NamedModule::Center, [[1, 0, 0], [6, 0, 0]]),
        (NamedModule::Steinberg, [[4, 4, 4], [8, 8, 8]]),
    ];
    for (m, rows) in want {
        let rep = module_kernel(&sl, &sl.named_module(m).unwrap(), &z, 1, false).unwrap();
        let got: Vec<[usize; 3]> = rep.rows.iter().map(|r| r.triple()).collect();
        if got != rows || !rep.rows.iter().all(|r| r.screenings_agree()) {
            fails.push(format!("B2 {}: {got:?}", m.name()));
        }
    }
    let a1 = lattices(Series::A, 1);
    let za = short_screening_set(&a1);
    let rep = module_kernel(&a1, &a1.named_module(NamedModule::Blue).unwrap(), &za, 3, true).unwrap();
    let dims: Vec<usize> = rep.rows.iter().map(|r| r.intersection).collect();
    if dims != [1, 0, 1, 4] {
        fails.push(format!("A1 vacuum kernel {dims:?}"));
    } else if !proportional(&rep.rows[2].basis[0], &stress_tensor(&a1).element) {
        fails.push("A1 h=2 kernel is not spanned by T".into());
    }
    let dt = start.elapsed();
    if dt > KERNEL_BUDGET {
        fails.push(format!("took {dt:.1?}"));
    }
    (fails, format!("B2 four modules, A1 vacuum 1,0,1,4 with T at h=2, {dt:.2?}"))
}

fn proportional(a: &FieldElement, b: &FieldElement) -> bool {
    let Some((m, u, cb)) = b.terms().next() else {
        return a.is_zero();
    };
    let ca = a.coeff(m, u);
    !ca.is_zero() && a.scale(*cb / ca) == *b
}

fn c7_nichols() -> Outcome {
    let mut fails = Vec::new();
    let mut checked = 0;
    for (n, level) in [(2usize, 4u32), (3, 3)] {
        let sl = lattices(Series::B, n);
        let z = short_screening_set(&sl);
        let tails: Vec<Momentum> = (0..n).map(|k| tail(n, k).neg()).collect();
        if sorted(z.clone()) != sorted(tails) {
            fails.push(format!("B{n}: screenings are not the alpha_(k..n)"));
        }
        for m in [NamedModule::Blue, NamedModule::Green] {
            let rep = nichols_check(&sl, &sl.named_module(m).unwrap(), &z, level).unwrap();
            checked += rep.relations.iter().map(|r| r.states_checked).sum::<usize>();
            if !rep.passed() {
                fails.push(format!("B{n} {} level {level}", m.name()));
            }
        }
    }
    (fails, format!("B2 level 4, B3 level 3, {checked} state checks"))
}

fn c8_virasoro() -> Outcome {
    let mut fails = Vec::new();
    let mut checks = 0;
    for (s, n) in [(Series::A, 1), (Series::B, 2)] {
        let sl = lattices(s, n);
        let rep = commutator_check(&sl, &sl.named_module(NamedModule::Blue).unwrap(), 3, 5).unwrap();
        checks += rep.checks;
        if !rep.passed() {
            fails.push(format!("{s}{n}: {} failures", rep.failures.len()));
        }
    }
    let mut runner = TestRunner::new(Config::with_cases(CASES));
    if let Err(e) = runner.run(&common::homogeneous(2), |a| props::l_minus_one(&a)) {
        fails.push(format!("L_-1 = d: {e}"));
    }
    (fails, format!("{checks} commutator checks, |m|,|n| <= 3, level 5; L_-1 = d on {CASES} states"))
}

/// `∏_{m≥1} (1 + s x^{2m−1+shift})^k` up to `x^max`, as integer coefficients in `x`.
fn fermion_oracle(sign: i128, odd: bool, k: u32, max: usize) -> Vec<i128> {
    let mut poly = vec![0i128; max + 1];
    poly[0] = 1;
    let mut m = 1;
    loop {
        let e = if odd { 2 * m - 1 } else { 2 * m };
        if e > max {
            break;
        }
        for _ in 0..k {
            for i in (e..=max).rev() {
                poly[i] += sign * poly[i - e];
            }
        }
        m += 1;
    }
    poly
}

/// Coefficients of `s` on the grid `offset + j/2`, `j = 0..=max`.
fn half_grid(s: &QSeries, max: usize) -> Vec<i128> {
    (0..=max).map(|j| s.coeff_at(s.offset + r(j as i128, 2)).to_integer()).collect()
}

fn c9_characters() -> Outcome {
    let mut fails = Vec::new();
    let jtp = jtp_check(20).unwrap();
    if !jtp.matches {
        fails.push("(a) vacuum != chi_ns+".into());
    }
    let cm = kernel_char_match(2, 1, 6).unwrap();
    let want = [("1/6", [1, 0]), ("1/6", [0, 4]), ("-1/12", [1, 6]), ("5/12", [4, 8])];
    for (row, (off, dims)) in cm.rows.iter().zip(want) {
        if row.offset != off || row.kernel_dims != dims || !row.matches {
            fails.push(format!("(b) {}: {} {:?}", row.name, row.offset, row.kernel_dims));
        }
    }
    if !cm.vacuum_sum_matches {
        fails.push("(b) Blue != 2(chi1 + chi2)".into());
    }
    let sf = sf_characters(2, 10).unwrap();
    let series = [
        ("ns+", &sf.ns_plus, fermion_oracle(1, false, 4, 20), r(1, 6)),
        ("ns-", &sf.ns_minus, fermion_oracle(-1, false, 4, 20), r(1, 6)),
        ("r+", &sf.r_plus, fermion_oracle(1, true, 4, 20), r(-1, 12)),
        ("r-", &sf.r_minus, fermion_oracle(-1, true, 4, 20), r(-1, 12)),
    ];
    for (name, s, oracle, off) in &series {
        if s.offset != *off || half_grid(s, 20) != *oracle {
            fails.push(format!("(c) {name} differs from the product expansion"));
        }
    }
    // Displayed prefixes, in steps of t^{1/2}.
    let printed: [(&str, &[i128]); 4] = [
        ("ns+", &[1, 0, 4, 0, 10]),
        ("ns-", &[1, 0, -4, 0, 10]),
        ("r+", &[1, 4, 6, 8, 16]),
        ("r-", &[1, -4, 6, -8, 16]),
    ];
    for ((name, s, _, _), (_, disp)) in series.iter().zip(printed) {
        let got = half_grid(s, disp.len() - 1);
        if got != disp {
            fails.push(format!("(c) displayed {name} {disp:?}, exact {got:?}"));
        }
    }
    let mut layers = 0;
    for (s, n) in [(Series::A, 1), (Series::B, 2)] {
        let sl = lattices(s, n);
        let c24 = sl.central_charge / int(24);
        for coset in sl.all_cosets() {
            let g = graded_dim_module(&sl, &coset, 6);
            for j in 0..g.coeffs.len() {
                let h = g.exponent(j) + c24;
                let d = layer_basis(&sl, &coset, h).dim();
                layers += 1;
                if g.coeffs[j] != int(d as i128) {
                    fails.push(format!("(d) {s}{n} [{}] h = {h}: {} vs {d}", coset.rep, g.coeffs[j]));
                }
            }
        }
    }
    (fails, format!("(a) order 20, (b) four modules, (c) order 10, (d) {layers} layers"))
}

fn c10_ope() -> Outcome {
    let mut fails = Vec::new();
    let check = |sl: &ScreeningLattices, f: &[Momentum], fails: &mut Vec<String>| {
        let e = VertexEngine::new(&sl.ambient);
        let n = sl.rank();
        for (i, fi) in f.iter().enumerate() {
            for (j, fj) in f.iter().enumerate() {
                let a = FieldElement::exp(fi.neg());
                let b = FieldElement::exp(fj.clone()).derive();
                let m2 = e.mode(&a, int(-2), &b).unwrap();
                let m1 = e.mode(&a, int(-1), &b).unwrap();
                let want2 = if i == j { FieldElement::vacuum(n) } else { FieldElement::zero(n) };
                if m2 != want2 || !m1.is_zero() {
                    fails.push(format!("{}: pair ({i},{j})", sl.rs.label()));
                }
            }
        }
    };
    check(&lattices(Series::A, 1), &[mom(&[int(1)])], &mut fails);
    let b2 = lattices(Series::B, 2);
    let f = [mom(&[int(0), int(1)]), mom(&[int(1), int(1)])];
    let amb = &b2.ambient;
    if amb.norm(&f[0]) != int(1) || amb.norm(&f[1]) != int(1) || !amb.pair(&f[0], &f[1]).is_zero() {
        fails.push("B2 short roots are not orthonormal".into());
    }
    check(&b2, &f, &mut fails);
    (fails, "A1 z^-2 -> vacuum, z^-1 -> 0; B2 two orthogonal pairs, cross terms vanish".into())
}

fn c11_degeneracy() -> Outcome {
    let mut fails = Vec::new();
    let table = classification_table().unwrap();
    for row in &table {
        if !row.matches {
            fails.push(format!("{} ell={}: {} / {}", row.g, row.ell, row.g0, row.gell));
        }
        if row.case == Case::Exotic && row.computed {
            fails.push(format!("{} ell={} exotic but computed", row.g, row.ell));
        }
    }
    let (s2, s3) = (|n: usize| 2i64.pow(n as u32), |n: usize| 4i64.pow(n as u32));
    let mut rows: Vec<ExtensionRow> = Vec::new();
    for n in 2..=4 {
        rows.push((Series::B, n, 4, 4, s2(n - 1), s3(n), int(-2 * n as i128), ["", "", "C2", "C3", "C4"][n]));
    }
    for n in 2..=3 {
        let nn = n as i128;
        rows.push((Series::C, n, 4, s2(n), 2, 4 * s2(n), int(3 * nn * nn - 2 * nn * nn * nn), ["", "", "B2", "B3"][n]));
    }
    rows.push((Series::F, 4, 4, 4, 4, 64, int(-80), "F4"));
    rows.push((Series::G, 2, 6, 3, 3, 27, int(-30), "G2"));
    for (s, n, ell, simples, dim_x, g0s, c, sym) in rows {
        let rep = extension_report(&build_root_system(s, n).unwrap(), ell).unwrap();
        let c_lattice = sl_of(s, n, ell).central_charge;
        let sym_ok = rep.global_symmetry == sym || (n == 2 && matches!(sym, "B2" | "C2") && rep.global_symmetry == "B2");
        let ok = rep.num_simples == simples
            && rep.quotient_order == simples
            && rep.dim_x == dim_x
            && rep.dim_x_from_counts == Some(dim_x)
            && rep.g0_num_simples == g0s
            && rep.central_charge_agrees
            && c_lattice == c
            && sym_ok;
        if !ok {
            fails.push(format!(
                "{s}{n} ell={ell}: simples {} dimX {} g0 {} c {} sym {}",
                rep.num_simples, rep.dim_x, rep.g0_num_simples, rep.central_charge, rep.global_symmetry
            ));
        }
    }
    (fails, format!("{} classification rows; 8 extension rows, dim X by determinant ratio", table.len()))
}

fn c12_properties() -> Outcome {
    let mut fails = Vec::new();
    let mut go = |name: &str, res: Result<(), String>| {
        if let Err(e) = res {
            fails.push(format!("{name}: {e}"));
        }
    };
    fn run<S: Strategy>(
        s: S,
        f: impl Fn(S::Value) -> Result<(), proptest::test_runner::TestCaseError>,
    ) -> Result<(), String> {
        TestRunner::new(Config::with_cases(CASES)).run(&s, f).map_err(|e| e.to_string())
    }
    use common::{coset_case, element, homogeneous, momentum};
    go("pairing equivariance", run((element(2), element(2)), |(a, b)| props::pairing_equivariance(&a, &b)));
    go("pairing exponents", run((homogeneous(2), homogeneous(2)), |(a, b)| props::pairing_exponents(&a, &b)));
    go(
        "coproduct multiplicative",
        run((element(2), element(2)), |(a, b)| props::coproduct_multiplicative(&a, &b)),
    );
    go("coproduct coassociative", run(element(2), |a| props::coproduct_coassociative(&a)));
    go("coset independence", run(coset_case(), |(sl, i, v)| props::coset_independence(&sl, i, &v)));
    go("state round trip", run(element(2), |a| props::round_trip(&a)));
    go("momentum round trip", run(momentum(2), |m| props::momentum_round_trip(&m)));
    (fails, format!("7 suites x {CASES} cases"))
}

fn main() {
    let mut h = Harness { unexpected: Vec::new() };
    let criteria: [Criterion; 12] = [
        ("lattice data", c1_lattice_data),
        ("central charges", c2_central_charges),
        ("simple-module counts", c3_simple_counts),
        ("groundstates", c4_groundstates),
        ("screening evaluations", c5_screening_golden),
        ("kernel tables", c6_kernels),
        ("Nichols relations", c7_nichols),
        ("Virasoro", c8_virasoro),
        ("characters", c9_characters),
        ("OPE check", c10_ope),
        ("degeneracy tables", c11_degeneracy),
        ("property suites", c12_properties),
    ];
    for (k, (name, f)) in criteria.iter().enumerate() {
        let (fails, detail) = f();
        h.report(k as u32 + 1, name, &fails, detail);
    }
    if !h.unexpected.is_empty() {
        eprintln!("unexpected failures: {:?}", h.unexpected);
        std::process::exit(1);
    }
}
