//! `key = value` config files, spliced into the argument list ahead of the user's own flags.

use std::ffi::OsString;
use std::path::Path;

use crate::error::{usage, CliError, Result};

/// Parses lines of `key = value`; `#` starts a comment.
pub fn read_config(path: &Path) -> Result<Vec<(String, String)>> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text)
}

pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return usage(format!("config line {}: expected `key = value`", idx + 1));
        };
        let key = key.trim().trim_start_matches("--").replace('_', "-");
        if key.is_empty() || key == "config" {
            return usage(format!("config line {}: bad key `{}`", idx + 1, key));
        }
        out.push((key, value.trim().to_string()));
    }
    Ok(out)
}

/// Inserts the config entries right after the subcommand path, so later occurrences on the
/// command line override them.
pub fn splice(argv: &[OsString], path: &[&str], entries: &[(String, String)]) -> Result<Vec<OsString>> {
    let mut at = 0;
    for name in path {
        at = argv
            .iter()
            .skip(at + 1)
            .position(|a| a == name)
            .map(|i| i + at + 1)
            .ok_or_else(|| CliError::Usage(format!("subcommand `{name}` not found in arguments")))?;
    }
    let mut injected: Vec<OsString> = Vec::new();
    for (key, value) in entries {
        match value.as_str() {
            "true" => injected.push(format!("--{key}").into()),
            "false" => {}
            _ => injected.push(format!("--{key}={value}").into()),
        }
    }
    let mut out = argv[..=at].to_vec();
    out.extend(injected);
    out.extend_from_slice(&argv[at + 1..]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn os(v: &[&str]) -> Vec<OsString> {
        v.iter().map(OsString::from).collect()
    }

    #[test]
    fn parse_and_splice() {
        let cfg = parse_config("# scan\ncheckpoints = 1e3,1e4\nmax_r=2\nfields = true\npairs=false\n").unwrap();
        assert_eq!(cfg.len(), 4);
        let argv = os(&["nonrandom", "--jobs", "2", "abelian", "C3", "--max-r", "1"]);
        let got = splice(&argv, &["abelian"], &cfg).unwrap();
        assert_eq!(
            got,
            os(&[
                "nonrandom",
                "--jobs",
                "2",
                "abelian",
                "--checkpoints=1e3,1e4",
                "--max-r=2",
                "--fields",
                "C3",
                "--max-r",
                "1"
            ])
        );
    }

    #[test]
    fn nested_subcommands() {
        let argv = os(&["nonrandom", "asymptotic", "predict", "--kind", "abelian"]);
        let got = splice(&argv, &["asymptotic", "predict"], &[("r".into(), "3".into())]).unwrap();
        assert_eq!(got[3], OsString::from("--r=3"));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_config("just words").is_err());
        assert!(parse_config("config = x").is_err());
    }
}
