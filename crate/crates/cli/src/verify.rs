//! The `verify` subcommand: every cross-check, scaled by the requested bounds.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::time::Instant;

use brauer_blocks::blocks::{block_key_int, classify_weight_class_int, dot_orbit, dot_vector, enumerate_block_members, BlockClassification};
use brauer_blocks::central::{
    brauer_gammas, central_character, check_lemma_o, first_admissibility_violation, gamma_factor,
    vacuum_character, weight_of_rational,
};
use brauer_blocks::rational::int;
use brauer_blocks::sequences::{make_sequence, same_orbit};
use brauer_blocks::wedge::{apply_b, relative_weight, WedgeVector};
use brauer_blocks::weights::{alpha_in_omega, alpha_part, bar_weight, omega_sub, reduce_mod_qtheta, same_bar_weight_int, RootVector};
use brauer_blocks::{enumerate_partitions, HalfInt, Partition, Rational};
use clap::Args;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::Output;

const MAX_SIZE_CAP: usize = 10;
const RANK_CAP: usize = 8;

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Largest partition size checked.
    #[arg(long, default_value_t = 5)]
    pub max_size: usize,
    /// Smallest δ checked.
    #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
    pub delta_min: i64,
    /// Largest δ checked.
    #[arg(long, default_value_t = 5, allow_hyphen_values = true)]
    pub delta_max: i64,
    /// Truncation order K for the series checks.
    #[arg(long, default_value_t = 24)]
    pub order: usize,
    /// Lift the caps on --max-size (10) and on the BFS rank (8).
    #[arg(long)]
    pub allow_large: bool,
    /// Report elapsed time per check (makes output non-deterministic).
    #[arg(long)]
    pub timings: bool,
    #[arg(long, hide = true)]
    pub inject_fault: bool,
}

#[derive(Serialize)]
struct CheckReport {
    name: &'static str,
    range: String,
    pass: bool,
    counterexample: Option<Value>,
    detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    elapsed_ms: Option<u128>,
}

/// Failure carries a reproducible input and a human-readable description.
type Verdict = Result<String, (Value, String)>;

struct Scope {
    max_size: usize,
    deltas: Vec<i64>,
    order: usize,
    rank_cap: usize,
    inject_fault: bool,
}

fn charge(delta: i64) -> HalfInt {
    HalfInt::from_twice(delta - 2)
}

fn entries(shape: &Partition, delta: i64, n: usize) -> Vec<i64> {
    (1..=n)
        .map(|k| delta - 2 - 2 * shape.part(k) as i64 + 2 * k as i64)
        .collect()
}

fn parity_and_zero(shape: &Partition, delta: i64) -> (usize, bool) {
    let n = shape.len() + delta.unsigned_abs() as usize + 4;
    let e = entries(shape, delta, n);
    (e.iter().filter(|&&x| x < 0).count() % 2, e.contains(&0))
}

fn even(delta: i64) -> bool {
    delta.rem_euclid(2) == 0
}

/// Runs `check` for every δ in parallel and reports the first failure in δ order.
fn per_delta(deltas: &[i64], check: impl Fn(i64) -> Result<usize, (Value, String)> + Sync) -> Result<usize, (Value, String)> {
    let results: Vec<_> = deltas.par_iter().map(|&d| check(d)).collect();
    results.into_iter().sum()
}

fn example() -> Verdict {
    let (l, m) = (Partition::new(vec![2, 2]).unwrap(), Partition::new(vec![2, 1]).unwrap());
    let cx = || json!({ "delta": 1, "lhs": [2, 2], "rhs": [2, 1] });
    let one = int(1);
    let (cl, cm) = (central_character(&l, &one), central_character(&m, &one));
    if cl != cm || cl != vacuum_character() {
        return Err((cx(), format!("central characters {cl} and {cm}")));
    }
    let diff = -&(&alpha_part(&l, 1) - &alpha_part(&m, 1));
    let minus_alpha0 = -&RootVector::alpha(HalfInt::ZERO);
    if same_bar_weight_int(&l, &m, 1) || diff != minus_alpha0 || reduce_mod_qtheta(&diff, 1).unwrap().is_zero() {
        return Err((cx(), "weight difference is not the class of -α_0".into()));
    }
    Ok(format!("C = {cl} for (2,2) and (2,1); weights differ by -α_0"))
}

fn orbit_vs_bfs(s: &Scope) -> Verdict {
    let labels = enumerate_partitions(s.max_size);
    let mut skipped = 0;
    let mut checked = 0;
    let mut fault_armed = s.inject_fault;
    for &delta in &s.deltas {
        let d = charge(delta);
        let mut orbits: HashMap<(Partition, usize), HashSet<Vec<i64>>> = HashMap::new();
        for a in &labels {
            for b in &labels {
                if a.size() % 2 != b.size() % 2 {
                    continue;
                }
                let base = a.size().max(b.size());
                let mut fast = same_orbit(&make_sequence(a, d), &make_sequence(b, d)).unwrap();
                if fault_armed {
                    fast = !fast;
                    fault_armed = false;
                }
                for n in [base, base + 2] {
                    if n > s.rank_cap {
                        skipped += 1;
                        continue;
                    }
                    let orbit = orbits
                        .entry((a.clone(), n))
                        .or_insert_with(|| dot_orbit(a, n, delta, s.rank_cap).unwrap());
                    let slow = orbit.contains(&dot_vector(b, n, delta).unwrap());
                    if slow != fast {
                        return Err((
                            json!({ "delta": delta, "lhs": a, "rhs": b, "n": n }),
                            format!("sequences say {fast}, BFS says {slow}"),
                        ));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} comparisons, {skipped} skipped above rank {}", s.rank_cap))
}

fn weight_bridge(s: &Scope) -> Verdict {
    let labels = enumerate_partitions(s.max_size);
    let n = per_delta(&s.deltas, |delta| {
        for lambda in &labels {
            let lhs = relative_weight(&make_sequence(&lambda.transpose(), charge(delta)));
            if lhs != -&alpha_part(lambda, delta) {
                return Err((json!({ "delta": delta, "partition": lambda }), "relative weight differs from -wt(λ)".into()));
            }
        }
        Ok(labels.len())
    })?;
    Ok(format!("{n} (λ, δ) pairs"))
}

fn split_counts(s: &Scope) -> Verdict {
    let seeds = enumerate_partitions(s.max_size);
    let n = per_delta(&s.deltas, |delta| {
        // the window must contain the partner block of every seed
        let window = seeds
            .iter()
            .map(|l| match classify_weight_class_int(l, delta) {
                BlockClassification::Split { partner } => partner.size(),
                BlockClassification::Single => l.size(),
            })
            .max()
            .unwrap_or(0);
        let mut classes: HashMap<_, (bool, BTreeSet<_>, bool, Partition)> = HashMap::new();
        for lambda in enumerate_partitions(window) {
            let entry = classes.entry(bar_weight(&lambda, delta)).or_insert_with(|| {
                (false, BTreeSet::new(), parity_and_zero(&lambda.transpose(), delta).1, lambda.clone())
            });
            entry.0 |= lambda.size() <= s.max_size;
            entry.1.insert(block_key_int(&lambda, delta));
        }
        let mut seen: Vec<_> = classes.into_values().filter(|c| c.0).collect();
        seen.sort_by(|x, y| x.3.cmp(&y.3));
        for (_, keys, zero, first) in &seen {
            let expected = if even(delta) && !zero { 2 } else { 1 };
            if keys.len() != expected {
                return Err((
                    json!({ "delta": delta, "partition": first, "window": window }),
                    format!("{} block keys in the class, expected {expected}", keys.len()),
                ));
            }
        }
        Ok(seen.len())
    })?;
    Ok(format!("{n} bar-weight classes"))
}

fn central_vs_bar(s: &Scope) -> Verdict {
    let labels = enumerate_partitions(s.max_size);
    let n = per_delta(&s.deltas, |delta| {
        let chars: Vec<_> = labels.iter().map(|l| central_character(l, &int(delta))).collect();
        for (i, l) in labels.iter().enumerate() {
            for (j, m) in labels.iter().enumerate() {
                let bar = same_bar_weight_int(l, m, delta);
                let central = chars[i] == chars[j];
                if bar && !central || even(delta) && central && !bar {
                    return Err((
                        json!({ "delta": delta, "lhs": l, "rhs": m }),
                        format!("bar weights equal {bar}, central characters equal {central}"),
                    ));
                }
            }
        }
        Ok(labels.len() * labels.len())
    })?;
    Ok(format!("{n} ordered pairs"))
}

fn lemma_o(s: &Scope) -> Verdict {
    let k = s.order;
    for &delta in &s.deltas {
        let gammas = brauer_gammas(&int(delta), k);
        if !check_lemma_o(&gammas, k).unwrap() {
            return Err((json!({ "delta": delta, "order": k }), "identity fails".into()));
        }
        // odd γ_j first enters the product at degree 1-j
        for idx in [1, if k % 2 == 1 { k } else { k.saturating_sub(1) }].into_iter().filter(|&j| j >= 1 && j <= k) {
            let mut bad = gammas.clone();
            bad[idx] += int(1);
            if check_lemma_o(&bad, k).unwrap() {
                return Err((json!({ "delta": delta, "order": k, "perturbed": idx }), "perturbation not detected".into()));
            }
        }
    }
    Ok(format!("K = {k}"))
}

fn admissibility(s: &Scope) -> Verdict {
    let k = s.order.saturating_sub(1);
    for &delta in &s.deltas {
        let gammas = brauer_gammas(&int(delta), k);
        if let Some(bad) = first_admissibility_violation(&gammas, k).unwrap() {
            return Err((json!({ "delta": delta, "k": bad }), "recursion fails".into()));
        }
        if k >= 1 {
            let mut planted = gammas.clone();
            planted[1] += int(1);
            if first_admissibility_violation(&planted, k).unwrap() != Some(1) {
                return Err((json!({ "delta": delta, "k": 1 }), "planted violation not reported".into()));
            }
        }
    }
    Ok(format!("odd k ≤ {k}"))
}

fn move_box(shape: &Partition, k: usize, step: i64) -> Option<Partition> {
    let mut parts: Vec<i64> = (1..=shape.len() + 1).map(|r| shape.part(r) as i64).collect();
    parts[k - 1] += step;
    let ok = parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&x| x >= 0);
    ok.then(|| Partition::new(parts.into_iter().map(|x| x as usize).collect()).unwrap())
}

fn b_oracle(shape: &Partition, delta: i64, twice_i: i64) -> BTreeSet<Partition> {
    let window = shape.len() + 1;
    let e = entries(shape, delta, window + 40);
    let rows = |target: i64| e.iter().position(|&x| x == target).filter(|&k| k < window);
    let mut out = BTreeSet::new();
    out.extend(rows(twice_i - 1).and_then(|k| move_box(shape, k + 1, -1)));
    out.extend(rows(-twice_i + 1).and_then(|k| move_box(shape, k + 1, 1)));
    out
}

fn wedge_boxes(s: &Scope) -> Verdict {
    let shapes = enumerate_partitions(s.max_size);
    let n = per_delta(&s.deltas, |delta| {
        let d = charge(delta);
        let mut terms = 0;
        for twice in (-20..=20).filter(|t| (t - (delta - 1)).rem_euclid(2) == 0) {
            let i = HalfInt::from_twice(twice);
            for shape in &shapes {
                let cx = || json!({ "delta": delta, "shape": shape, "twiceIndex": twice });
                let seq = make_sequence(shape, d);
                let before = relative_weight(&seq);
                let out = apply_b(i, &WedgeVector::basis(&seq)).unwrap();
                let got: BTreeSet<Partition> = out.terms().map(|(t, _)| t.shape().clone()).collect();
                if got != b_oracle(shape, delta, twice) || out.terms().any(|(_, c)| *c != int(1)) {
                    return Err((cx(), format!("terms {got:?} disagree with the box oracle")));
                }
                for (t, _) in out.terms() {
                    let shift = &relative_weight(&t) - &before;
                    if shift != RootVector::alpha(i) && shift != -&RootVector::alpha(-i) {
                        return Err((cx(), format!("weight shift {shift:?} for {:?}", t.shape())));
                    }
                    terms += 1;
                }
            }
        }
        Ok(terms)
    })?;
    Ok(format!("{n} output terms, |i| ≤ 10"))
}

/// A window of size + 16 holds a second member only for small labels: at
/// δ = 4 the next member after (2,2,1) has size 23.
const MEMBER_SEED_CAP: usize = 4;

fn block_members(s: &Scope) -> Verdict {
    let labels = enumerate_partitions(s.max_size.min(MEMBER_SEED_CAP));
    let n = per_delta(&s.deltas, |delta| {
        for lambda in &labels {
            let members = enumerate_block_members(lambda, &int(delta), lambda.size() + 16);
            if members.len() < 2 || !members.contains(lambda) {
                return Err((json!({ "delta": delta, "partition": lambda }), format!("{} members", members.len())));
            }
        }
        Ok(labels.len())
    })?;
    Ok(format!("{n} blocks each have ≥ 2 members up to size + 16"))
}

fn gamma_weights() -> Verdict {
    for twice in -9..=9 {
        let a = HalfInt::from_twice(twice);
        let lhs = weight_of_rational(&gamma_factor(&a.to_rational()));
        let rhs: BTreeMap<Rational, i64> = omega_sub(&alpha_in_omega(a), &alpha_in_omega(-a))
            .into_iter()
            .map(|(k, v)| (k.to_rational(), v))
            .collect();
        if lhs != rhs {
            return Err((json!({ "twiceIndex": twice }), "weight of γ_a differs from α_a - α_{-a}".into()));
        }
    }
    Ok("twice(a) ∈ -9..=9".into())
}

fn key_consistency(s: &Scope) -> Verdict {
    let labels = enumerate_partitions(s.max_size);
    let n = per_delta(&s.deltas, |delta| {
        let keys: Vec<_> = labels.iter().map(|l| block_key_int(l, delta)).collect();
        let tags: Vec<_> = labels.iter().map(|l| parity_and_zero(&l.transpose(), delta)).collect();
        let weights: Vec<_> = labels.iter().map(|l| bar_weight(l, delta)).collect();
        for i in 0..labels.len() {
            for j in 0..labels.len() {
                let keys_equal = keys[i] == keys[j];
                let rhs = weights[i] == weights[j] && (!even(delta) || tags[i].0 == tags[j].0 || tags[i].1 || tags[j].1);
                if keys_equal != rhs {
                    return Err((
                        json!({ "delta": delta, "lhs": labels[i], "rhs": labels[j] }),
                        format!("keys equal {keys_equal}, weight and parity test {rhs}"),
                    ));
                }
            }
        }
        Ok(labels.len() * labels.len())
    })?;
    Ok(format!("{n} ordered pairs"))
}

pub fn run(args: &VerifyArgs) -> Result<Output, String> {
    if args.max_size > MAX_SIZE_CAP && !args.allow_large {
        return Err(format!("--max-size: {} exceeds the cap of {MAX_SIZE_CAP} (pass --allow-large)", args.max_size));
    }
    if args.delta_min > args.delta_max {
        return Err(format!("--delta-min: {} is above --delta-max {}", args.delta_min, args.delta_max));
    }
    let scope = Scope {
        max_size: args.max_size,
        deltas: (args.delta_min..=args.delta_max).collect(),
        order: args.order,
        rank_cap: if args.allow_large { usize::MAX } else { RANK_CAP },
        inject_fault: args.inject_fault,
    };
    let sizes = format!("size ≤ {}", scope.max_size);
    let deltas = format!("δ ∈ {}..={}", args.delta_min, args.delta_max);
    let s = &scope;
    type Check<'a> = Box<dyn Fn() -> Verdict + 'a>;
    let checks: Vec<(&'static str, String, Check)> = vec![
        ("central equivalence without bar-weight equality", "δ = 1, (2,2) vs (2,1)".into(), Box::new(example)),
        ("orbit decision equals dot-action BFS", format!("{sizes}, {deltas}, n ∈ {{max size, max size + 2}}"), Box::new(|| orbit_vs_bfs(s))),
        ("relative weight of i_{d,λ^t} equals -wt(λ)", format!("{sizes}, {deltas}"), Box::new(|| weight_bridge(s))),
        ("bar-weight classes hold 2 blocks exactly when predicted", format!("classes meeting {sizes}, {deltas}"), Box::new(|| split_counts(s))),
        ("bar-weight vs central equivalence", format!("{sizes}, {deltas}"), Box::new(|| central_vs_bar(s))),
        ("O(u)O(-u) = (1/2-u)(1/2+u) at truncation", format!("K = {}, {deltas}", s.order), Box::new(|| lemma_o(s))),
        ("admissibility recursion", format!("odd k < {}, {deltas}", s.order), Box::new(|| admissibility(s))),
        ("wedge b_i action vs box oracle and weight shift", format!("{sizes}, {deltas}, |i| ≤ 10"), Box::new(|| wedge_boxes(s))),
        ("blocks have at least two members", format!("size ≤ {}, {deltas}, members up to size + 16", s.max_size.min(MEMBER_SEED_CAP)), Box::new(|| block_members(s))),
        ("wt(γ_a(u)) = α_a - α_{-a}", "twice(a) ∈ -9..=9".into(), Box::new(gamma_weights)),
        ("block keys vs bar weight and parity", format!("{sizes}, {deltas}"), Box::new(|| key_consistency(s))),
    ];

    let mut reports = Vec::new();
    for (name, range, check) in checks {
        let start = Instant::now();
        let verdict = check();
        let elapsed_ms = args.timings.then(|| start.elapsed().as_millis());
        let (pass, counterexample, detail) = match verdict {
            Ok(note) => (true, None, note),
            Err((cx, why)) => (false, Some(cx), why),
        };
        reports.push(CheckReport { name, range, pass, counterexample, detail, elapsed_ms });
    }
    let pass = reports.iter().all(|r| r.pass);

    let mut text = String::new();
    for r in &reports {
        write!(text, "{} {} [{}]", if r.pass { "PASS" } else { "FAIL" }, r.name, r.range).unwrap();
        if let Some(ms) = r.elapsed_ms {
            write!(text, " {ms} ms").unwrap();
        }
        writeln!(text, ": {}", r.detail).unwrap();
        if let Some(cx) = &r.counterexample {
            writeln!(text, "  counterexample: {cx}").unwrap();
        }
    }
    writeln!(text, "{}", if pass { "all checks passed" } else { "verification FAILED" }).unwrap();

    Ok(Output {
        json: json!({ "checks": reports, "pass": pass }),
        text,
        failed: !pass,
    })
}
