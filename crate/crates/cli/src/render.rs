//! Text and CSV renderings of the report structs. Every function is a pure
//! formatter over already-computed data, so output is byte-deterministic.

use std::fmt::Write;

use crate::report::{
    CaterpillarReport, ConjectureReport, EnumerationReport, ReplayOutcome, SortReport,
    Table1Report, TreeReport,
};

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "n/a".to_string(), T::to_string)
}

fn yes_no(v: &Option<bool>) -> String {
    v.map_or_else(
        || "n/a".to_string(),
        |b| if b { "yes" } else { "no" }.to_string(),
    )
}

fn set(values: &[u32]) -> String {
    let body = values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{body}}}")
}

fn push_notes(out: &mut String, notes: &[String]) {
    for note in notes {
        writeln!(out, "note            {note}").unwrap();
    }
}

/// One CSV field, quoted only when the content requires it.
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn tree_report_text(r: &TreeReport) -> String {
    let mut out = String::new();
    writeln!(out, "tree            {}  (n={})", r.tree.edges, r.n).unwrap();
    writeln!(out, "canonical       {}", r.tree.canonical).unwrap();
    writeln!(out, "exact diameter  {}", opt(&r.exact_diameter)).unwrap();
    writeln!(out, "f bound         {}", opt(&r.f_bound)).unwrap();
    writeln!(
        out,
        "beta set        {}",
        r.beta_set.as_deref().map_or_else(|| "n/a".into(), set)
    )
    .unwrap();
    writeln!(out, "beta max        {}", opt(&r.beta_max)).unwrap();
    writeln!(out, "gap f           {}", opt(&r.gap_f)).unwrap();
    writeln!(out, "gap beta        {}", opt(&r.gap_beta)).unwrap();
    writeln!(out, "sharp           {}", yes_no(&r.sharp)).unwrap();
    writeln!(out, "witness         {}", opt(&r.witness)).unwrap();
    writeln!(
        out,
        "algorithm A     policy={} pairs={} diameters={:?} beta={}",
        r.algorithm_a.policy, r.algorithm_a.pairs, r.algorithm_a.step_diameters, r.algorithm_a.beta
    )
    .unwrap();
    push_notes(&mut out, &r.notes);
    out.trim_end().to_string()
}

pub fn table1_text(r: &Table1Report) -> String {
    let mut out = String::from("  n    s_n    h_n  delta_n  gamma_n\n");
    for row in &r.rows {
        writeln!(
            out,
            "{:>3} {:>6} {:>6} {:>8} {:>8}",
            row.n, row.s_n, row.h_n, row.delta_n, row.gamma_n
        )
        .unwrap();
    }
    out.trim_end().to_string()
}

pub fn table1_csv(r: &Table1Report) -> String {
    let mut out = String::from("n,s_n,h_n,delta_n,gamma_n\n");
    for row in &r.rows {
        writeln!(
            out,
            "{},{},{},{},{}",
            row.n, row.s_n, row.h_n, row.delta_n, row.gamma_n
        )
        .unwrap();
    }
    out.trim_end().to_string()
}

pub fn caterpillar_text(r: &CaterpillarReport) -> String {
    let mut out = String::new();
    writeln!(out, "tree            {}  (n={})", r.tree.edges, r.n).unwrap();
    writeln!(
        out,
        "f bound         {}  ({})",
        r.f_bound,
        if r.f_bound_swept {
            "verified by sweep"
        } else {
            "closed form"
        }
    )
    .unwrap();
    writeln!(out, "exact diameter  {}", opt(&r.exact_diameter)).unwrap();
    writeln!(out, "diameter bound  {}", r.diameter_upper_bound).unwrap();
    writeln!(out, "gap             {}", opt(&r.gap)).unwrap();
    writeln!(out, "gap at least    {}", r.gap_at_least).unwrap();
    push_notes(&mut out, &r.notes);
    out.trim_end().to_string()
}

pub fn conjectures_text(r: &ConjectureReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "scanned {} trees over n={}..{}",
        r.trees_scanned, r.n_min, r.n_max
    )
    .unwrap();
    let sections: [(&str, &Vec<crate::report::BetaFinding>); 3] = [
        ("beta_max below f(T)", &r.beta_max_below_f),
        ("multi-valued beta set", &r.multi_valued_beta),
        ("beta below exact diameter", &r.beta_below_diameter),
    ];
    for (title, findings) in sections {
        if findings.is_empty() {
            writeln!(out, "{title}: none").unwrap();
        } else {
            writeln!(out, "{title}:").unwrap();
            for f in findings {
                writeln!(
                    out,
                    "  n={} {}  B={} beta_max={} f={} diameter={}",
                    f.n,
                    f.edges,
                    set(&f.beta_set),
                    f.beta_max,
                    f.f_bound,
                    f.exact_diameter
                )
                .unwrap();
            }
        }
    }
    out.trim_end().to_string()
}

fn replay_text(out: &mut String, r: &ReplayOutcome) {
    writeln!(out, "replay word     {}  (length {})", r.word, r.length).unwrap();
    for (idx, step) in r.steps.iter().enumerate() {
        writeln!(
            out,
            "  step {:>3}  {}  kind={}  f={}",
            idx + 1,
            step.edge,
            step.kind.as_deref().unwrap_or("-"),
            step.f_after
        )
        .unwrap();
    }
    match r.first_invalid {
        Some(step) => writeln!(out, "replay verdict  invalid at step {step}").unwrap(),
        None => writeln!(
            out,
            "replay verdict  all steps admissible; {}",
            if r.sorted {
                "sorts the permutation"
            } else {
                "does not reach the identity"
            }
        )
        .unwrap(),
    }
}

pub fn sort_text(r: &SortReport) -> String {
    let mut out = String::new();
    writeln!(out, "tree            {}  (n={})", r.tree.edges, r.n).unwrap();
    writeln!(out, "permutation     {} = {}", r.permutation, r.cycles).unwrap();
    writeln!(out, "f_T             {}", r.f_t).unwrap();
    writeln!(
        out,
        "word            {}  (length {}, kinds {})",
        r.ak_word, r.ak_word_length, r.ak_edge_kinds
    )
    .unwrap();
    writeln!(out, "exact distance  {}", opt(&r.exact_distance)).unwrap();
    writeln!(out, "optimal         {}", yes_no(&r.ak_optimal)).unwrap();
    if let Some(replay) = &r.replay {
        replay_text(&mut out, replay);
    }
    push_notes(&mut out, &r.notes);
    out.trim_end().to_string()
}

pub fn enumeration_text(r: &EnumerationReport) -> String {
    let mut out = String::new();
    writeln!(out, "n={}: {} non-isomorphic trees", r.n, r.count).unwrap();
    for t in &r.trees {
        writeln!(out, "{:>4}  {}  {}", t.index, t.edges, t.canonical).unwrap();
    }
    out.trim_end().to_string()
}

pub fn enumeration_csv(r: &EnumerationReport) -> String {
    let mut out = String::from("index,edges,canonical\n");
    for t in &r.trees {
        writeln!(
            out,
            "{},{},{}",
            t.index,
            csv_field(&t.edges),
            csv_field(&t.canonical)
        )
        .unwrap();
    }
    out.trim_end().to_string()
}
