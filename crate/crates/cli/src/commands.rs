use std::fmt::Write as _;

use brauer_blocks::blocks::{
    block_key, block_reason, brauer_algebra_blocks, classify_weight_class, dot_orbit_member,
    enumerate_block_members, same_block, BlockClassification, DEFAULT_RANK_CAP,
};
use brauer_blocks::central::{
    brauer_gammas, central_character, check_lemma_o, first_admissibility_violation,
};
use brauer_blocks::rational::{as_integer, parse_rational};
use brauer_blocks::sequences::make_sequence;
use brauer_blocks::wedge::{apply_b, apply_lowering, apply_raising, WedgeVector};
use brauer_blocks::{HalfInt, Partition, Rational};
use serde_json::{json, Value};

use crate::{verify, Command, WedgeOp};

pub struct Output {
    pub json: Value,
    pub text: String,
    /// Verification failed; exit status 1.
    pub failed: bool,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            failed: false,
        }
    }
}

fn label(p: &Partition) -> String {
    if p.is_empty() {
        "∅".into()
    } else {
        format!("({p})")
    }
}

/// Integral δ serializes as a number, anything else as a `"p/q"` string.
fn delta_json(delta: &Rational) -> Value {
    match as_integer(delta) {
        Some(d) => json!(d),
        None => json!(delta.to_string()),
    }
}

fn integral(delta: &Rational, flag: &str) -> Result<i64, String> {
    as_integer(delta).ok_or_else(|| format!("--{flag}: expected an integer, got {delta}"))
}

pub fn run(command: &Command) -> Result<Output, String> {
    match command {
        Command::SameBlock(args) => {
            let delta = &args.delta.delta;
            let same = same_block(&args.lhs, &args.rhs, delta);
            let (keys, reason) = match as_integer(delta) {
                Some(d) => {
                    let lhs = block_key(&args.lhs, delta).map_err(|e| e.to_string())?;
                    let rhs = block_key(&args.rhs, delta).map_err(|e| e.to_string())?;
                    (
                        json!({ "lhs": lhs, "rhs": rhs }),
                        serde_json::to_value(block_reason(&args.lhs, &args.rhs, d)).unwrap(),
                    )
                }
                None => (Value::Null, json!({ "semisimple": true })),
            };
            let json = json!({
                "delta": delta_json(delta),
                "lhs": args.lhs,
                "rhs": args.rhs,
                "same_block": same,
                "block_key": keys,
                "reason": reason,
            });
            let text = format!(
                "L{} and L{} at δ = {delta}: {}\n",
                label(&args.lhs),
                label(&args.rhs),
                if same { "same block" } else { "different blocks" }
            );
            Ok(Output::ok(json, text))
        }
        Command::BlockKey(args) => {
            let delta = &args.delta.delta;
            let key = block_key(&args.partition, delta).map_err(|e| format!("--delta: {e}"))?;
            let text = format!(
                "block key of L{} at δ = {delta}: {}\n",
                label(&args.partition),
                serde_json::to_string(&key).unwrap()
            );
            Ok(Output::ok(
                json!({ "delta": delta_json(delta), "partition": args.partition, "block_key": key }),
                text,
            ))
        }
        Command::Block { label: args, max_size } => {
            let delta = &args.delta.delta;
            let max = max_size.unwrap_or(args.partition.size() + 8);
            if max < args.partition.size() {
                return Err(format!("--max-size: {max} is smaller than the label size"));
            }
            let members = enumerate_block_members(&args.partition, delta, max);
            let mut text = format!(
                "block of L{} at δ = {delta}, members of size ≤ {max}:\n",
                label(&args.partition)
            );
            for m in &members {
                writeln!(text, "  {}", label(m)).unwrap();
            }
            Ok(Output::ok(
                json!({
                    "delta": delta_json(delta),
                    "partition": args.partition,
                    "max_size": max,
                    "members": members,
                }),
                text,
            ))
        }
        Command::ClassifyWeightClass(args) => {
            let delta = &args.delta.delta;
            let class = classify_weight_class(&args.partition, delta).map_err(|e| format!("--delta: {e}"))?;
            let text = match &class {
                BlockClassification::Single => {
                    format!("bar-weight class of L{} is a single block\n", label(&args.partition))
                }
                BlockClassification::Split { partner } => format!(
                    "bar-weight class of L{} splits into two blocks; L{} lies in the other one\n",
                    label(&args.partition),
                    label(partner)
                ),
            };
            Ok(Output::ok(
                json!({ "delta": delta_json(delta), "partition": args.partition, "classification": class }),
                text,
            ))
        }
        Command::BrauerBlocks { delta, n } => {
            let d = integral(&delta.delta, "delta")?;
            let blocks = brauer_algebra_blocks(*n, d);
            let mut text = format!("blocks of B_{n}({d}):\n");
            for b in &blocks {
                let names: Vec<_> = b.iter().map(label).collect();
                writeln!(text, "  {{{}}}", names.join(", ")).unwrap();
            }
            Ok(Output::ok(json!({ "delta": d, "n": n, "blocks": blocks }), text))
        }
        Command::DotOrbit {
            pair,
            n,
            allow_large_rank,
        } => {
            let d = integral(&pair.delta.delta, "delta")?;
            let cap = if *allow_large_rank { usize::MAX } else { DEFAULT_RANK_CAP };
            let member =
                dot_orbit_member(&pair.lhs, &pair.rhs, *n, d, cap).map_err(|e| format!("--n: {e}"))?;
            let text = format!(
                "{} + ρ_{n} {} the W_{n}-orbit of {} + ρ_{n} (δ = {d})\n",
                label(&pair.rhs),
                if member { "lies in" } else { "is not in" },
                label(&pair.lhs)
            );
            Ok(Output::ok(
                json!({
                    "delta": d,
                    "n": n,
                    "lhs": pair.lhs,
                    "rhs": pair.rhs,
                    "in_orbit": member,
                }),
                text,
            ))
        }
        Command::CentralChar(args) => {
            let delta = &args.delta.delta;
            let f = central_character(&args.partition, delta);
            let text = format!("C(u) on Δ{} at δ = {delta}: {f}\n", label(&args.partition));
            Ok(Output::ok(
                json!({
                    "delta": delta_json(delta),
                    "partition": args.partition,
                    "factored": f.to_string(),
                    "character": f,
                }),
                text,
            ))
        }
        Command::CentrallyEquivalent(args) => {
            let delta = &args.delta.delta;
            let f = central_character(&args.lhs, delta);
            let g = central_character(&args.rhs, delta);
            let same = f == g;
            let text = format!(
                "{} ∼ {}: {same}\n  C_lhs = {f}\n  C_rhs = {g}\n",
                label(&args.lhs),
                label(&args.rhs)
            );
            Ok(Output::ok(
                json!({
                    "delta": delta_json(delta),
                    "lhs": args.lhs,
                    "rhs": args.rhs,
                    "centrally_equivalent": same,
                    "lhs_factored": f.to_string(),
                    "rhs_factored": g.to_string(),
                }),
                text,
            ))
        }
        Command::SeriesCheck { delta, order, gammas } => {
            let gammas = match gammas {
                Some(list) => list
                    .split(',')
                    .map(|t| parse_rational(t).map_err(|e| format!("--gammas: {e}")))
                    .collect::<Result<Vec<_>, _>>()?,
                None => brauer_gammas(&delta.delta, *order),
            };
            let lemma = check_lemma_o(&gammas, *order).map_err(|e| format!("--gammas: {e}"))?;
            let violation = first_admissibility_violation(&gammas, *order).map_err(|e| format!("--gammas: {e}"))?;
            let failed = !lemma || violation.is_some();
            let text = format!(
                "order K = {order}: O(u)O(-u) identity {}, admissibility {}\n",
                if lemma { "holds" } else { "FAILS" },
                match violation {
                    None => "holds".to_string(),
                    Some(k) => format!("FAILS at k = {k}"),
                }
            );
            Ok(Output {
                json: json!({
                    "delta": delta_json(&delta.delta),
                    "order": order,
                    "gammas": gammas.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "lemma_o": lemma,
                    "admissible": violation.is_none(),
                    "first_violation": violation,
                }),
                text,
                failed,
            })
        }
        Command::WedgeApply {
            delta,
            shape,
            op,
            index,
        } => {
            let d = integral(&delta.delta, "delta")?;
            let i = HalfInt::from_rational(index)
                .ok_or_else(|| format!("--index: {index} is not a half-integer"))?;
            let seq = make_sequence(shape, HalfInt::from_twice(d - 2));
            let v = WedgeVector::basis(&seq);
            let out = match op {
                WedgeOp::E => apply_raising(i, &v),
                WedgeOp::F => apply_lowering(i, &v),
                WedgeOp::B => apply_b(i, &v),
            }
            .map_err(|e| format!("--index: {e}"))?;
            let name = match op {
                WedgeOp::E => "e",
                WedgeOp::F => "f",
                WedgeOp::B => "b",
            };
            let mut text = format!("{name}_{i} w{} =", label(shape));
            if out.is_zero() {
                text.push_str(" 0");
            }
            for (n, (s, c)) in out.terms().enumerate() {
                let sep = if n == 0 { " " } else { " + " };
                write!(text, "{sep}{c}·w{}", label(s.shape())).unwrap();
            }
            text.push('\n');
            Ok(Output::ok(
                json!({
                    "delta": d,
                    "input": seq,
                    "op": name,
                    "twiceIndex": i.twice(),
                    "result": out,
                }),
                text,
            ))
        }
        Command::Verify(args) => verify::run(args),
    }
}
