//! Text renderings of a sampled trajectory.

use std::fmt::Write as _;

use hypga::text::serialize_canonical;
use hypga::{ChartPoint, Trajectory};
use serde_json::json;

const AXES: [&str; 3] = ["x", "y", "z"];

/// Kept samples and the number dropped because their chart weight vanished.
pub fn kept(traj: &Trajectory) -> (Vec<(f64, &ChartPoint)>, usize) {
    (traj.charted().collect(), traj.vanishing_count())
}

/// `t,x[,y[,z]],weight` with 17 significant digits.
pub fn csv(traj: &Trajectory, dim: usize) -> String {
    let mut out = String::from("t,");
    for axis in &AXES[..dim] {
        out.push_str(axis);
        out.push(',');
    }
    out.push_str("weight\n");
    for (t, c) in kept(traj).0 {
        write!(out, "{t:.16e}").unwrap();
        for x in &c.coords {
            write!(out, ",{x:.16e}").unwrap();
        }
        writeln!(out, ",{:.16e}", c.weight).unwrap();
    }
    out
}

pub fn json(traj: &Trajectory) -> String {
    let samples: Vec<_> = traj
        .samples
        .iter()
        .filter_map(|s| {
            let c = s.chart.as_ref().ok()?;
            Some(json!({ "t": s.t, "object": serialize_canonical(&s.object), "coords": c.coords, "weight": c.weight }))
        })
        .collect();
    let dropped: Vec<_> = traj
        .samples
        .iter()
        .filter_map(|s| s.chart.as_ref().err().map(|e| json!({ "t": s.t, "error": e.kind() })))
        .collect();
    let doc = json!({
        "space": traj.object.space().name(),
        "generator": serialize_canonical(&traj.generator),
        "object": serialize_canonical(&traj.object),
        "samples": samples,
        "dropped": dropped,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("orbit document serializes");
    text.push('\n');
    text
}

/// Klein disk drawing: dashed unit circle and the orbit as a polyline.
pub fn svg(traj: &Trajectory) -> String {
    let points: Vec<String> =
        kept(traj).0.iter().map(|(_, c)| format!("{:.9},{:.9}", c.coords[0], -c.coords[1])).collect();
    let mut out = String::new();
    writeln!(out, r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="-1.1 -1.1 2.2 2.2" width="440" height="440">"#)
        .unwrap();
    writeln!(out, r#"  <circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="0.005" stroke-dasharray="0.03 0.02"/>"#)
        .unwrap();
    writeln!(out, r#"  <polyline fill="none" stroke="steelblue" stroke-width="0.008" points="{}"/>"#, points.join(" "))
        .unwrap();
    if let Some(first) = points.first() {
        let (x, y) = first.split_once(',').expect("formatted pair");
        writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="0.015" fill="crimson"/>"#).unwrap();
    }
    out.push_str("</svg>\n");
    out
}
