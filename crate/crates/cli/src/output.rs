use std::io::Write;
use std::path::Path;

use crate::scan::{CliffordPoint, ScramblingReport};
use crate::Result;

pub const SCAN_HEADER: [&str; 9] = ["t", "minusI3", "minusT3", "IAC", "IAD", "TSWC", "TSWD", "TSWtot", "status"];

/// Shortest `%.12g`-style rendering: 12 significant digits, `.` decimal
/// separator, trailing zeros dropped.
pub fn fmt_sig(v: f64) -> String {
    if v.is_nan() {
        return "NaN".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let fixed = format!("{:.*}", (11 - exp) as usize, v);
        trim_zeros(&fixed).to_string()
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_scan_csv<W: Write>(report: &ScramblingReport, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SCAN_HEADER)?;
    for r in &report.rows {
        let nums = [r.t, r.minus_i3, r.minus_t3, r.i_a_c, r.i_a_d, r.tsw_c, r.tsw_d, r.tsw_tot];
        let mut rec: Vec<String> = nums.iter().map(|&v| fmt_sig(v)).collect();
        rec.push(r.status.label().into());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn scan_csv_string(report: &ScramblingReport) -> Result<String> {
    let mut buf = Vec::new();
    write_scan_csv(report, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

pub fn write_clifford_csv<W: Write>(points: &[CliffordPoint], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["theta", "minusI3", "minusT3"])?;
    for p in points {
        w.write_record([fmt_sig(p.theta), fmt_sig(p.minus_i3), fmt_sig(p.minus_t3)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)?;
    }
    std::fs::write(path, contents)?;
    Ok(())
}

const PALETTE: [&str; 6] = ["#000000", "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e"];

/// Self-contained SVG line plot; NaN samples break the line.
pub fn line_plot(title: &str, x_label: &str, xs: &[f64], series: &[(&str, Vec<f64>)]) -> String {
    let (w, h) = (720.0, 420.0);
    let (left, right, top, bottom) = (60.0, 150.0, 40.0, 50.0);
    let finite = |v: &&f64| v.is_finite();
    let x_min = xs.iter().filter(finite).copied().fold(f64::INFINITY, f64::min);
    let x_max = xs.iter().filter(finite).copied().fold(f64::NEG_INFINITY, f64::max);
    let ys = series.iter().flat_map(|(_, v)| v.iter()).filter(finite).copied();
    let (mut y_min, mut y_max) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
    if !y_min.is_finite() {
        (y_min, y_max) = (0.0, 1.0);
    }
    if y_max - y_min < 1e-12 {
        y_min -= 0.5;
        y_max += 0.5;
    }
    let x_span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let px = |x: f64| left + (x - x_min) / x_span * (w - left - right);
    let py = |y: f64| h - bottom - (y - y_min) / (y_max - y_min) * (h - top - bottom);

    let mut s = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\" font-family=\"sans-serif\" font-size=\"12\">\n\
         <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n\
         <text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        (left + w - right) / 2.0,
        escape(title)
    );
    s += &format!(
        "<rect x=\"{left}\" y=\"{top}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>\n",
        w - left - right,
        h - top - bottom
    );
    for k in 0..=4 {
        let fx = x_min + x_span * k as f64 / 4.0;
        let fy = y_min + (y_max - y_min) * k as f64 / 4.0;
        s += &format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
            px(fx),
            h - bottom + 16.0,
            short(fx)
        );
        s += &format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"end\">{}</text>\n",
            left - 6.0,
            py(fy) + 4.0,
            short(fy)
        );
    }
    s += &format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{}</text>\n",
        (left + w - right) / 2.0,
        h - 12.0,
        escape(x_label)
    );
    for (i, (name, ys)) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let mut segment: Vec<String> = Vec::new();
        let flush = |seg: &mut Vec<String>, s: &mut String| {
            if seg.len() > 1 {
                *s += &format!(
                    "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                    seg.join(" ")
                );
            }
            seg.clear();
        };
        for (&x, &y) in xs.iter().zip(ys) {
            if x.is_finite() && y.is_finite() {
                segment.push(format!("{:.2},{:.2}", px(x), py(y)));
            } else {
                flush(&mut segment, &mut s);
            }
        }
        flush(&mut segment, &mut s);
        let ly = top + 16.0 + 18.0 * i as f64;
        s += &format!(
            "<line x1=\"{:.1}\" y1=\"{ly:.1}\" x2=\"{:.1}\" y2=\"{ly:.1}\" stroke=\"{color}\" stroke-width=\"2\"/>\n\
             <text x=\"{:.1}\" y=\"{:.1}\">{}</text>\n",
            w - right + 10.0,
            w - right + 30.0,
            w - right + 36.0,
            ly + 4.0,
            escape(name)
        );
    }
    s += "</svg>\n";
    s
}

fn short(v: f64) -> String {
    let s = format!("{v:.3}");
    trim_zeros(&s).to_string()
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn scan_plot(report: &ScramblingReport, title: &str) -> String {
    let col = |f: fn(&crate::scan::ScanRow) -> f64| report.rows.iter().map(f).collect::<Vec<_>>();
    line_plot(
        title,
        "t",
        &report.times(),
        &[
            ("-I3", col(|r| r.minus_i3)),
            ("-T3", col(|r| r.minus_t3)),
            ("I(A:C)", col(|r| r.i_a_c)),
            ("I(A:D)", col(|r| r.i_a_d)),
            ("TSW(C)", col(|r| r.tsw_c)),
            ("TSW(D)", col(|r| r.tsw_d)),
        ],
    )
}

pub fn clifford_plot(points: &[CliffordPoint]) -> String {
    let xs: Vec<f64> = points.iter().map(|p| p.theta).collect();
    line_plot(
        "Clifford circuit",
        "theta",
        &xs,
        &[
            ("-I3", points.iter().map(|p| p.minus_i3).collect()),
            ("-T3", points.iter().map(|p| p.minus_t3).collect()),
        ],
    )
}
