//! Survey serialization (JSON and CSV) and the on-disk survey cache.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::cells::SurveyResult;

pub const CSV_HEADER: [&str; 6] = ["tableau", "shape", "size", "smooth_count", "nonsmooth_count", "classification"];

/// Pretty JSON with a trailing newline.
pub fn survey_to_json(survey: &SurveyResult) -> String {
    let mut out = serde_json::to_string_pretty(survey).expect("survey serializes");
    out.push('\n');
    out
}

pub fn survey_from_json(text: &str) -> serde_json::Result<SurveyResult> {
    serde_json::from_str(text)
}

/// One line per cell, keyed by the canonical tableau text.
pub fn survey_to_csv(survey: &SurveyResult) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for c in &survey.cells {
        writer
            .write_record([
                c.tableau.key(),
                c.shape.to_string(),
                c.size.to_string(),
                c.smooth_count.to_string(),
                c.nonsmooth_count.to_string(),
                c.classification.to_string(),
            ])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("survey_n{n}.json"))
}

/// A cached survey for `n`, if one exists, parses, and is for the same `n`.
pub fn load_cached(dir: &Path, n: usize) -> Option<SurveyResult> {
    let text = fs::read_to_string(cache_path(dir, n)).ok()?;
    survey_from_json(&text).ok().filter(|s| s.n == n)
}

pub fn store_cached(dir: &Path, survey: &SurveyResult) -> io::Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, survey.n);
    fs::write(&path, survey_to_json(survey))?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::{survey, SurveyOptions};

    #[test]
    fn json_round_trip() {
        let s = survey(5, SurveyOptions::default()).unwrap();
        let text = survey_to_json(&s);
        assert_eq!(survey_from_json(&text).unwrap(), s);
        assert!(text.contains("\"classification\": \"ALL_SMOOTH\""));
    }

    #[test]
    fn json_rejects_invalid_tableau() {
        let s = survey(3, SurveyOptions::default()).unwrap();
        let text =
            survey_to_json(&s).replacen("[\n          1,\n          2,\n          3\n        ]", "[\n 2, 1, 3 ]", 1);
        assert!(survey_from_json(&text).is_err());
    }

    #[test]
    fn csv_layout() {
        let s = survey(3, SurveyOptions::default()).unwrap();
        let csv = survey_to_csv(&s);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "tableau,shape,size,smooth_count,nonsmooth_count,classification");
        assert_eq!(lines[1], "\"1,2,3\",3,1,1,0,ALL_SMOOTH");
        assert_eq!(lines[2], "\"1,3|2\",\"2,1\",2,2,0,ALL_SMOOTH");
        assert_eq!(lines.len(), 5);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load_cached(dir.path(), 4).is_none());
        let s = survey(4, SurveyOptions::default()).unwrap();
        let path = store_cached(dir.path(), &s).unwrap();
        assert!(path.ends_with("survey_n4.json"));
        assert_eq!(load_cached(dir.path(), 4), Some(s));
        // A file whose n disagrees with its name is ignored.
        fs::copy(&path, cache_path(dir.path(), 5)).unwrap();
        assert!(load_cached(dir.path(), 5).is_none());
    }
}
