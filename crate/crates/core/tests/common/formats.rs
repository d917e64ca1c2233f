//! Reading results back out of each presenter's output.

use isar_lint::engine::Report;
use isar_lint::report::{present_json, present_text, present_xml, JSON_SCHEMA};

/// (path, lint, line, col, severity)
pub type Entry = (String, String, usize, usize, String);

pub fn from_reports(reports: &[Report]) -> Vec<Entry> {
    let mut out: Vec<Entry> = reports
        .iter()
        .flat_map(|rep| {
            rep.results.iter().map(|r| {
                (
                    rep.path.clone(),
                    r.lint_name.clone(),
                    r.range.start_line,
                    r.range.start_col,
                    r.severity.as_str().to_owned(),
                )
            })
        })
        .collect();
    out.sort();
    out
}

pub fn from_text(text: &str) -> Vec<Entry> {
    let mut out = Vec::new();
    for line in text.lines() {
        let Some(rest) = line.strip_suffix(']') else {
            continue;
        };
        let (head, lint) = rest.rsplit_once(" [").unwrap();
        // path:line:col: severity: message
        let mut parts = head.splitn(5, ':');
        let path = parts.next().unwrap().to_owned();
        let line_no = parts.next().unwrap().parse().unwrap();
        let col = parts.next().unwrap().parse().unwrap();
        let severity = parts.next().unwrap().trim().to_owned();
        out.push((path, lint.to_owned(), line_no, col, severity));
    }
    out.sort();
    out
}

pub fn from_json(text: &str) -> Vec<Entry> {
    let doc: serde_json::Value = serde_json::from_str(text).unwrap();
    let mut out = Vec::new();
    for file in doc["files"].as_array().unwrap() {
        for l in file["lints"].as_array().unwrap() {
            out.push((
                file["path"].as_str().unwrap().to_owned(),
                l["name"].as_str().unwrap().to_owned(),
                l["start_line"].as_u64().unwrap() as usize,
                l["start_col"].as_u64().unwrap() as usize,
                l["severity"].as_str().unwrap().to_owned(),
            ));
        }
    }
    out.sort();
    out
}

pub fn from_xml(text: &str) -> Vec<Entry> {
    let doc = roxmltree::Document::parse(text).unwrap();
    let mut out = Vec::new();
    for file in doc.descendants().filter(|n| n.has_tag_name("file")) {
        let path = file.attribute("path").unwrap();
        for l in file.descendants().filter(|n| n.has_tag_name("lint")) {
            let num = |a| l.attribute(a).unwrap().parse().unwrap();
            out.push((
                path.to_owned(),
                l.attribute("name").unwrap().to_owned(),
                num("start_line"),
                num("start_col"),
                l.attribute("severity").unwrap().to_owned(),
            ));
        }
    }
    out.sort();
    out
}

/// Checks the three presenters agree with the reports, the JSON against
/// its schema and the XML for well-formedness.
pub fn check(reports: &[Report]) -> Result<(), String> {
    let want = from_reports(reports);
    let text = present_text(reports, true);
    let json = present_json(reports);
    let xml = present_xml(reports);
    if roxmltree::Document::parse(&xml).is_err() {
        return Err("xml is not well-formed".into());
    }
    let schema: serde_json::Value = serde_json::from_str(JSON_SCHEMA).unwrap();
    let instance: serde_json::Value = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    if let Err(e) = jsonschema::validate(&schema, &instance) {
        return Err(format!("json fails the schema: {e}"));
    }
    for (name, got) in [
        ("text", from_text(&text)),
        ("json", from_json(&json)),
        ("xml", from_xml(&xml)),
    ] {
        if got != want {
            return Err(format!("{name} output disagrees: {got:?} vs {want:?}"));
        }
    }
    Ok(())
}
