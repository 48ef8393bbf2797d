use std::io::Write;

use ramloci::curves::{
    build_basis, order_sequence_at, torsion_comparison, total_weight, HyperellipticModel,
    MonomialBasis, OrderSequence, Place, PrecisionPolicy, WeightReport,
};
use serde_json::{json, Value};

use crate::config::Format;
use crate::error::{exit, CliError};
use crate::parse::{parse_curve, parse_rational, require_split};
use crate::{CurveAction, CurveArgs};

/// Reads `inf`, `X` (a branch point) or `X,Y`.
pub fn parse_place(model: &HyperellipticModel, text: &str) -> Result<Place, CliError> {
    let t = text.trim();
    if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") {
        return Ok(Place::Infinity);
    }
    let bad = || CliError::Place(text.to_string());
    let place = match t.split_once(',') {
        Some((x, y)) => {
            let (x, y) = (
                parse_rational(x).ok_or_else(bad)?,
                parse_rational(y).ok_or_else(bad)?,
            );
            model.place_at(x, y)?
        }
        None => {
            let place = Place::Branch {
                x: parse_rational(t).ok_or_else(bad)?,
            };
            model.check_place(&place)?;
            place
        }
    };
    Ok(place)
}

fn policy(model: &HyperellipticModel, args: &CurveArgs) -> Result<PrecisionPolicy, CliError> {
    if args.precision_cap == 0 {
        return Err(CliError::Usage("precision cap must be positive".into()));
    }
    Ok(PrecisionPolicy::for_system(model.genus(), args.i).with_cap(args.precision_cap))
}

fn check_i(args: &CurveArgs, min: i64) -> Result<(), CliError> {
    if args.i < min {
        return Err(CliError::Usage(format!(
            "--i must be at least {min}, got {}",
            args.i
        )));
    }
    Ok(())
}

fn emit(format: Format, out: &mut dyn Write, value: Value, pretty: &str) -> Result<(), CliError> {
    match format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&value).expect("value serializes")
        )?,
        Format::Pretty | Format::Tsv => writeln!(out, "{pretty}")?,
    }
    Ok(())
}

fn header(model: &HyperellipticModel, i: i64) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(1));
    m.insert("model".into(), json!(model.to_string()));
    m.insert("genus".into(), json!(model.genus()));
    m.insert("i".into(), json!(i));
    m
}

fn basis_strings(basis: &MonomialBasis) -> Vec<String> {
    basis.elements.iter().map(ToString::to_string).collect()
}

fn orders_value(orders: &OrderSequence) -> Value {
    json!({ "orders": orders.orders(), "weight": orders.weight() })
}

fn weights_text(rep: &WeightReport, tsv: bool) -> String {
    if !tsv {
        return rep.to_string();
    }
    let mut lines = vec!["place\torders\tweight".to_string()];
    for e in &rep.entries {
        let orders: Vec<String> = e.orders.orders().iter().map(ToString::to_string).collect();
        lines.push(format!(
            "{}\t{}\t{}",
            e.place,
            orders.join(","),
            e.orders.weight()
        ));
    }
    for c in &rep.conjugates {
        lines.push(format!("roots of {}\t\t{}", c.factor, c.weight()));
    }
    lines.push(format!("ordinary\t\t{}", rep.remainder));
    lines.push(format!("total\t\t{}", rep.total));
    lines.join("\n")
}

/// Runs one `curve` subcommand.
pub fn cmd_curve(action: &CurveAction, out: &mut dyn Write) -> Result<i32, CliError> {
    match action {
        CurveAction::Basis(args) => {
            check_i(args, -1)?;
            let model = parse_curve(&args.model)?;
            let basis = build_basis(&model, args.i);
            let names = basis_strings(&basis);
            let mut v = header(&model, args.i);
            v.insert("basis".into(), json!(names));
            let text = match args.format {
                Format::Tsv => names.join("\t"),
                _ => names.join(", "),
            };
            emit(args.format, out, Value::Object(v), &text)?;
            Ok(exit::PASS)
        }
        CurveAction::Orders { args, place } => {
            check_i(args, -1)?;
            let model = parse_curve(&args.model)?;
            let place = parse_place(&model, place)?;
            let basis = build_basis(&model, args.i);
            let orders = order_sequence_at(&model, &basis, &place, &policy(&model, args)?)?;
            let mut v = header(&model, args.i);
            v.insert("place".into(), json!(place.to_string()));
            v.extend(
                orders_value(&orders)
                    .as_object()
                    .cloned()
                    .unwrap_or_default(),
            );
            let text = format!("place {place}\norders {orders}\nweight {}", orders.weight());
            emit(args.format, out, Value::Object(v), &text)?;
            Ok(exit::PASS)
        }
        CurveAction::Weights {
            args,
            require_split: split,
        } => {
            check_i(args, -1)?;
            let mut model = parse_curve(&args.model)?;
            if *split {
                model = require_split(model)?;
            }
            let rep = total_weight(&model, args.i, &policy(&model, args)?)?;
            let mut v = header(&model, args.i);
            let places: Vec<Value> = rep
                .entries
                .iter()
                .map(|e| {
                    let mut p = orders_value(&e.orders);
                    p["place"] = json!(e.place.to_string());
                    p
                })
                .collect();
            let conjugates: Vec<Value> = rep
                .conjugates
                .iter()
                .map(|c| json!({ "factor": c.factor.to_string(), "weight_each": c.weight_each, "weight": c.weight() }))
                .collect();
            v.insert("places".into(), json!(places));
            v.insert("conjugate_branches".into(), json!(conjugates));
            v.insert("ordinary_weight".into(), json!(rep.remainder));
            v.insert("total".into(), json!(rep.total));
            emit(
                args.format,
                out,
                Value::Object(v),
                &weights_text(&rep, args.format == Format::Tsv),
            )?;
            Ok(exit::PASS)
        }
        CurveAction::Torsion(args) => {
            check_i(args, 1)?;
            let model = parse_curve(&args.model)?;
            let cmp = torsion_comparison(&model, args.i)?;
            let verdict = if cmp.matches() { "pass" } else { "fail" };
            let mut v = header(&model, args.i);
            v.insert(
                "ramification_locus".into(),
                json!(cmp.ramification_locus.to_string()),
            );
            v.insert("torsion_locus".into(), json!(cmp.torsion_locus.to_string()));
            v.insert("verdict".into(), json!(verdict));
            let text = format!(
                "ramification locus {}\n{}-torsion locus {}\nverdict {verdict}",
                cmp.ramification_locus,
                args.i + 1,
                cmp.torsion_locus
            );
            emit(args.format, out, Value::Object(v), &text)?;
            Ok(if cmp.matches() {
                exit::PASS
            } else {
                exit::FAILURE
            })
        }
    }
}
