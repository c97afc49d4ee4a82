//! JSON encodings of library values. Object keys are sorted by `serde_json`'s
//! default map, so output is byte-deterministic.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::curve::{CurveEdge, CurveRay, DualityReport, PlaneCurve, Shape};
use crate::geom::Point2;
use crate::parse::format_poly_with;
use crate::subdiv::Subdivision;
use crate::tropical::{Rational, TropNum, TropPoly};

fn big(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

pub fn rational(r: &Rational) -> Value {
    json!({ "num": big(r.numer()), "den": big(r.denom()) })
}

pub fn trop_num(v: &TropNum) -> Value {
    match v {
        TropNum::Bottom => json!("-inf"),
        TropNum::Finite(r) => rational(r),
    }
}

pub fn point(p: &Point2) -> Value {
    json!({ "x": rational(&p.x), "y": rational(&p.y) })
}

pub fn poly(f: &TropPoly, vars: &[String]) -> Value {
    json!(format_poly_with(f, vars))
}

pub fn subdivision(s: &Subdivision) -> Value {
    let cells: Vec<Value> = s
        .cells()
        .iter()
        .map(|c| json!({ "vertices": c.vertices(), "points": c.points() }))
        .collect();
    json!({
        "ambient": s.ambient(),
        "cells": cells,
        "dimension": s.dimension(),
        "vertices": s.vertices().into_iter().collect::<Vec<_>>(),
    })
}

fn pair(p: (i64, i64)) -> Value {
    json!([p.0, p.1])
}

fn edge(e: &CurveEdge) -> Value {
    json!({
        "endpoints": [point(&e.endpoints[0]), point(&e.endpoints[1])],
        "weight": e.weight,
        "dual": [pair(e.dual[0]), pair(e.dual[1])],
    })
}

fn ray(r: &CurveRay) -> Value {
    json!({
        "base": point(&r.base),
        "direction": pair(r.direction),
        "weight": r.weight,
        "dual": [pair(r.dual[0]), pair(r.dual[1])],
    })
}

pub fn curve(c: &PlaneCurve, balanced: bool) -> Value {
    json!({
        "vertices": c.vertices().iter().map(point).collect::<Vec<_>>(),
        "edges": c.edges().iter().map(edge).collect::<Vec<_>>(),
        "rays": c.rays().iter().map(ray).collect::<Vec<_>>(),
        "lines": c.lines().iter().map(ray).collect::<Vec<_>>(),
        "balanced": balanced,
    })
}

pub fn shape(s: &Shape, weight: i64) -> Value {
    match s {
        Shape::Segment(p, q) => {
            json!({ "kind": "segment", "endpoints": [point(p), point(q)], "weight": weight })
        }
        Shape::Ray { base, direction } => {
            json!({ "kind": "ray", "base": point(base), "direction": pair(*direction), "weight": weight })
        }
        Shape::Line { base, direction } => {
            json!({ "kind": "line", "base": point(base), "direction": pair(*direction), "weight": weight })
        }
    }
}

pub fn duality(r: &DualityReport) -> Value {
    use crate::curve::Clause;
    let tally = |clause: Option<Clause>| {
        let matching: Vec<_> = r.outcomes.iter().filter(|o| o.clause == clause).collect();
        let pass = matching.iter().filter(|o| o.consistent()).count();
        json!({ "pass": pass, "fail": matching.len() - pass })
    };
    let violations: Vec<Value> = r
        .violations()
        .map(|o| {
            json!({
                "point": o.point.iter().map(rational).collect::<Vec<_>>(),
                "member": o.member,
            })
        })
        .collect();
    json!({
        "samples": r.outcomes.len(),
        "members": r.members(),
        "passed": r.passed(),
        "clauses": {
            "graph": tally(Some(Clause::Graph)),
            "below_numerator": tally(Some(Clause::BelowOnNumerator)),
            "above_denominator": tally(Some(Clause::AboveOnDenominator)),
            "none": tally(None),
        },
        "violations": violations,
    })
}
