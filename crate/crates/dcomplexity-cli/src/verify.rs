//! Verification suites: reference-table comparisons, multi-route agreement
//! of the counting formulas, the constructive propositions, census closed
//! forms, and the threshold conjecture report. Each check prints one
//! PASS/FAIL line; any FAIL makes the run exit nonzero.

use crate::output::{Format, Report};
use crate::render_table_grid;
use clap::ValueEnum;
use dcomplexity::census::{frequency_table, proposition4_check, proposition5_check, threshold_bk};
use dcomplexity::constructor::{
    construct_with_complexity, identity_check, max_complexity, search, Construction, IdentitySpec,
    SearchMode, SearchRequest,
};
use dcomplexity::dsubstring::{a_profile, complexity_substrings};
use dcomplexity::sequences::{n_k2_closed, n_kd, n_kd_high_d, n_kd_via_b, saturation, table1};
use dcomplexity::series::series_n;
use dcomplexity::word::{BigCount, Gap, PatternWord, Word};

pub const GOLDEN_TABLE1: &str = include_str!("../golden/table1.txt");
pub const GOLDEN_TABLE2: [(usize, &str); 5] = [
    (2, include_str!("../golden/table2_k2.txt")),
    (3, include_str!("../golden/table2_k3.txt")),
    (4, include_str!("../golden/table2_k4.txt")),
    (5, include_str!("../golden/table2_k5.txt")),
    (6, include_str!("../golden/table2_k6.txt")),
];

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Routes,
    Props,
    Census,
    Conjecture,
    All,
}

struct Checker {
    failures: usize,
    checks: usize,
}

impl Checker {
    fn new() -> Self {
        Checker {
            failures: 0,
            checks: 0,
        }
    }

    fn pass(&mut self, name: &str) {
        self.checks += 1;
        println!("PASS {name}");
    }

    fn fail(&mut self, name: &str, expected: impl std::fmt::Display, actual: impl std::fmt::Display) {
        self.checks += 1;
        self.failures += 1;
        println!("FAIL {name} expected={expected} actual={actual}");
    }

    fn eq<T: PartialEq + std::fmt::Display>(&mut self, name: &str, expected: T, actual: T) {
        if expected == actual {
            self.pass(name);
        } else {
            self.fail(name, expected, actual);
        }
    }

    fn assert(&mut self, name: &str, ok: bool) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, "true", "false");
        }
    }
}

pub fn run(suite: Suite, kmax: Option<usize>) -> u8 {
    let mut c = Checker::new();
    let result = dispatch(suite, kmax, &mut c);
    if let Err(err) = result {
        c.fail("suite completed without errors", "ok", err);
    }
    println!(
        "{} checks, {} failures",
        c.checks, c.failures
    );
    if c.failures == 0 {
        0
    } else {
        1
    }
}

fn dispatch(suite: Suite, kmax: Option<usize>, c: &mut Checker) -> dcomplexity::Result<()> {
    match suite {
        Suite::Tables => suite_tables(c),
        Suite::Routes => suite_routes(kmax.unwrap_or(24), c),
        Suite::Props => suite_props(kmax.unwrap_or(12), c),
        Suite::Census => suite_census(kmax.unwrap_or(8), c),
        Suite::Conjecture => suite_conjecture(kmax.unwrap_or(10), c),
        Suite::All => {
            suite_tables(c)?;
            suite_routes(24, c)?;
            suite_props(12, c)?;
            suite_census(8, c)?;
            suite_conjecture(10, c)
        }
    }
}

/// Renders the N(k,d) grid exactly as `table --no-header` does.
pub fn rendered_table1(kmax: usize, dmax: usize) -> dcomplexity::Result<String> {
    let grid = table1(kmax, dmax)?;
    let (header, rows) = render_table_grid(&grid);
    let mut report = Report::new("table", true);
    report.param("kmax", kmax);
    report.param("dmax", dmax);
    report.result_row(header, rows);
    Ok(report.render(Format::Table))
}

/// Renders the census for one k exactly as `freq --no-header` does.
pub fn rendered_table2(k: usize) -> dcomplexity::Result<String> {
    let table = frequency_table(k)?;
    let mut report = Report::new("freq", true);
    report.param("k", k);
    let rows: Vec<Vec<String>> = (k..=table.max_possible())
        .map(|c| vec![c.to_string(), table.frequency(c).to_string()])
        .collect();
    report.result_row(vec!["complexity".into(), "frequency".into()], rows);
    Ok(report.render(Format::Table))
}

fn suite_tables(c: &mut Checker) -> dcomplexity::Result<()> {
    let rendered = rendered_table1(10, 10)?;
    c.assert("table1 10x10 matches golden file", rendered == GOLDEN_TABLE1);
    for (k, golden) in GOLDEN_TABLE2 {
        let rendered = rendered_table2(k)?;
        c.assert(
            &format!("table2 k={k} matches golden file"),
            rendered == golden,
        );
    }
    Ok(())
}

fn suite_routes(kmax: usize, c: &mut Checker) -> dcomplexity::Result<()> {
    let dmax = 12usize;
    let mut routes_ok = true;
    let mut closed2_ok = true;
    for d in 1..=dmax {
        let gap = Gap::new(d)?;
        let series = series_n(gap, kmax)?;
        for k in 1..=kmax {
            let reference = n_kd(k, gap)?;
            if n_kd_via_b(k, gap)? != reference {
                routes_ok = false;
                c.fail(
                    &format!("b-route N({k},{d})"),
                    &reference,
                    &n_kd_via_b(k, gap)?,
                );
            }
            if series.coefficient(k).to_biguint() != Some(reference.clone()) {
                routes_ok = false;
                c.fail(
                    &format!("series route N({k},{d})"),
                    &reference,
                    &series.coefficient(k),
                );
            }
            if d == 2 && n_k2_closed(k)? != reference {
                closed2_ok = false;
            }
        }
    }
    c.assert(
        &format!("recurrence = b-route = series for k<=24, d<=12"),
        routes_ok,
    );
    c.assert("d=2 Fibonacci closed form agrees for k<=24", closed2_ok);

    let mut prop1_ok = true;
    for k in 1..=kmax {
        for offset in 1..=k.saturating_sub(1) {
            if k + 2 < 2 * offset {
                continue;
            }
            let d = k - offset;
            if d == 0 {
                continue;
            }
            if n_kd_high_d(k, offset)? != n_kd(k, Gap::new(d)?)? {
                prop1_ok = false;
            }
        }
    }
    c.assert("high-d closed form agrees wherever k >= 2d-2", prop1_ok);

    let mut saturation_ok = true;
    let mut monotone_ok = true;
    for k in 1..=kmax {
        let sat = saturation(k);
        for d in 1..=kmax {
            let v = n_kd(k, Gap::new(d)?)?;
            if d + 1 >= k && v != sat {
                saturation_ok = false;
            }
            if d > 1 {
                let prev = n_kd(k, Gap::new(d - 1)?)?;
                let strictly_below_sat = d - 1 < k.saturating_sub(1);
                if prev > v || (strictly_below_sat && prev == v) || (!strictly_below_sat && prev != v) {
                    monotone_ok = false;
                }
            }
        }
    }
    c.assert("saturation N(k,d) = 2^k - 1 for d >= k-1", saturation_ok);
    c.assert(
        "columns increase in d with equality exactly at d >= k-1",
        monotone_ok,
    );

    let mut profile_ok = true;
    for k in 1..=kmax.min(16) {
        let word = Word::new((0..k as u8).collect(), k)?;
        for d in 1..=dmax {
            let gap = Gap::new(d)?;
            let sum: BigCount = a_profile(&word, gap)?.iter().sum();
            if sum != n_kd(k, gap)? {
                profile_ok = false;
            }
        }
    }
    c.assert("position-profile sum equals N(k,d) for k<=16", profile_ok);
    Ok(())
}

fn all_patterns(k: usize, max_blocks: usize) -> Vec<PatternWord> {
    let mut out = Vec::new();
    let mut prefix = vec![0u8];
    fn rec(prefix: &mut Vec<u8>, used: usize, k: usize, max_blocks: usize, out: &mut Vec<PatternWord>) {
        if prefix.len() == k {
            out.push(PatternWord::from_rgs(prefix.clone()).unwrap());
            return;
        }
        for next in 0..=(used.min(max_blocks - 1)) as u8 {
            prefix.push(next);
            rec(prefix, used.max(next as usize + 1), k, max_blocks, out);
            prefix.pop();
        }
    }
    rec(&mut prefix, 1, k, max_blocks, &mut out);
    out
}

fn suite_props(kmax: usize, c: &mut Checker) -> dcomplexity::Result<()> {
    // identities a)-i) over a parameter grid
    let mut identity_ok = true;
    for k in 2..=kmax {
        let mut specs: Vec<IdentitySpec> = vec![IdentitySpec::Trivial { k }];
        for i in 1..=k / 2 {
            specs.push(IdentitySpec::SingleIntruder { i, k });
        }
        for l in 1..=k.min(10) {
            specs.push(IdentitySpec::ManyLetters { l, k });
        }
        for n in 1..=k.min(8) {
            specs.push(IdentitySpec::WrapAround { k, n });
        }
        specs.push(IdentitySpec::DistinctFamily { k: k.min(8), n: 3 });
        let p = Word::new((0..k.min(8) as u8).collect(), k.min(8))?;
        let q = Word::new(vec![0, 1, 1, 0], 2)?;
        specs.push(IdentitySpec::DisjointConcat { p: p.clone(), q });
        specs.push(IdentitySpec::BoundsAny { word: p.clone() });
        specs.push(IdentitySpec::BoundsNontrivial { word: p.clone() });
        specs.push(IdentitySpec::FreshLastLetter { word: p.clone() });
        for spec in &specs {
            for check in identity_check(spec)? {
                if !check.holds {
                    identity_ok = false;
                    c.fail(&format!("identity {} at k={k}", check.label), "holds", "violated");
                }
            }
        }
    }
    c.assert("identities a)-i) hold on the witness grid", identity_ok);

    // constructive recipes self-verify for every feasible C <= 200
    let mut construct_ok = true;
    let mut general_impossible = Vec::new();
    let mut binary_impossible = Vec::new();
    for target in 1..=200u32 {
        let t = BigCount::from(target);
        match construct_with_complexity(&t, false)? {
            Construction::Recipe(r) => {
                if complexity_substrings(r.word()) != t || r.word().distinct_symbols() < 2 {
                    construct_ok = false;
                }
            }
            Construction::Impossible => general_impossible.push(target),
        }
        match construct_with_complexity(&t, true)? {
            Construction::Recipe(r) => {
                if complexity_substrings(r.word()) != t || r.word().distinct_symbols() != 2 {
                    construct_ok = false;
                }
            }
            Construction::Impossible => binary_impossible.push(target),
        }
    }
    c.assert("constructed witnesses verify for all C <= 200", construct_ok);
    c.eq(
        "general exceptional set",
        "[1, 2, 4]".to_string(),
        format!("{general_impossible:?}"),
    );
    c.eq(
        "binary exceptional set",
        "[1, 2, 4, 6, 10, 18, 22]".to_string(),
        format!("{binary_impossible:?}"),
    );

    // exhaustive confirmation that the exceptional sets admit no witness
    let mut impossibility_ok = true;
    for (targets, blocks) in [(vec![1u32, 2, 4], None), (vec![6, 10, 18, 22], Some(2))] {
        for target in targets {
            let c_val = target as usize;
            for k in 2..=c_val {
                if k * (k + 1) / 2 < c_val {
                    continue;
                }
                let req = SearchRequest {
                    target: BigCount::from(target),
                    length: Some(k),
                    alphabet_size: blocks.unwrap_or(k),
                    mode: SearchMode::AllCanonical,
                };
                let nontrivial = search(&req)?
                    .into_iter()
                    .filter(|p| match blocks {
                        Some(b) => p.num_blocks() == b,
                        None => p.num_blocks() >= 2,
                    })
                    .count();
                if nontrivial > 0 {
                    impossibility_ok = false;
                }
            }
        }
    }
    c.assert(
        "exhaustive search finds no witness in the exceptional sets",
        impossibility_ok,
    );

    // exhaustive upper bound on small patterns
    let mut bound_ok = true;
    for k in 1..=8usize {
        for p in all_patterns(k, 3) {
            let measured = complexity_substrings(&p.to_word());
            if measured > max_complexity(p.num_blocks(), k) {
                bound_ok = false;
            }
        }
    }
    c.assert("K_1 <= maximal-complexity bound on k<=8 patterns", bound_ok);
    Ok(())
}

fn suite_census(kmax: usize, c: &mut Checker) -> dcomplexity::Result<()> {
    for k in 2..=kmax {
        c.assert(
            &format!("closed forms of the frequency proposition at k={k}"),
            proposition4_check(k)?,
        );
        c.assert(
            &format!("zero ranges of the frequency proposition at k={k}"),
            proposition5_check(k)?,
        );
    }
    let mut mass_ok = true;
    for k in 1..=kmax {
        let t = frequency_table(k)?;
        if t.total() != &BigCount::from(k).pow(k as u32) {
            mass_ok = false;
        }
    }
    c.assert("census mass equals k^k", mass_ok);
    Ok(())
}

fn suite_conjecture(kmax: usize, c: &mut Checker) -> dcomplexity::Result<()> {
    for (k, expected) in [(3usize, 5usize), (4, 7), (5, 11), (6, 14)] {
        if k > kmax {
            continue;
        }
        let r = threshold_bk(k)?;
        c.eq(&format!("b_{k}"), expected, r.b_k);
    }
    for k in 5..=kmax {
        let r = threshold_bk(k)?;
        match r.conjecture_value {
            Some(_) if r.matches => {
                c.pass(&format!("conjecture matches computed b_{k} = {}", r.b_k));
            }
            Some(predicted) if k <= 6 => {
                c.fail(&format!("conjecture at k={k}"), predicted, r.b_k);
            }
            Some(predicted) => {
                // beyond the paper's certified data a mismatch is a finding
                println!(
                    "FINDING conjecture predicts b_{k}={predicted} but census gives {}",
                    r.b_k
                );
                c.pass(&format!("conjecture report at k={k} (non-fatal)"));
            }
            None => c.pass(&format!("no conjecture decomposition for k={k}")),
        }
        if let Some(witness_ok) = r.witness_matches {
            c.assert(&format!("threshold witness word at k={k}"), witness_ok);
        }
    }
    Ok(())
}
