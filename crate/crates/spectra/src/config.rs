//! `key=value` experiment files.
//!
//! Each entry becomes `--key value` (or a bare `--key` for switches set to
//! `true`) inserted right after the subcommand, ahead of the user's own
//! flags. Later occurrences override earlier ones, so the command line wins.
//! A `command=<name>` entry supplies the subcommand when argv has none.

use std::ffi::OsString;
use std::path::Path;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigEntry {
    pub line: usize,
    pub key: String,
    pub value: String,
}

/// Blank lines and `#` comments are skipped; everything else must be
/// `key=value`.
pub fn parse_config(text: &str) -> Result<Vec<ConfigEntry>, CliError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| CliError::Validation(format!("config line {}: expected key=value", i + 1)))?;
        let key = k.trim().trim_start_matches("--");
        if key.is_empty() {
            return Err(CliError::Validation(format!("config line {}: empty key", i + 1)));
        }
        out.push(ConfigEntry {
            line: i + 1,
            key: key.to_string(),
            value: v.trim().to_string(),
        });
    }
    Ok(out)
}

/// Pulls `--config PATH` (or `--config=PATH`) out of argv.
fn take_config_path(argv: &mut Vec<OsString>) -> Result<Option<OsString>, CliError> {
    let mut found = None;
    let mut i = 1;
    while i < argv.len() {
        let arg = argv[i].to_string_lossy().into_owned();
        if arg == "--" {
            break;
        }
        if arg == "--config" {
            if i + 1 >= argv.len() {
                return Err(CliError::Usage("--config needs a path".into()));
            }
            found = Some(argv.remove(i + 1));
            argv.remove(i);
            continue;
        }
        if let Some(p) = arg.strip_prefix("--config=") {
            found = Some(OsString::from(p));
            argv.remove(i);
            continue;
        }
        i += 1;
    }
    Ok(found)
}

pub(crate) fn merge_config(cmd: &clap::Command, mut argv: Vec<OsString>) -> Result<Vec<OsString>, CliError> {
    let Some(path) = take_config_path(&mut argv)? else {
        return Ok(argv);
    };
    let path = Path::new(&path);
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let entries = parse_config(&text)?;

    // position of the subcommand, if argv names one
    let sub_pos = argv
        .iter()
        .enumerate()
        .skip(1)
        .find(|(_, a)| cmd.find_subcommand(a.to_string_lossy().as_ref()).is_some())
        .map(|(i, _)| i);
    let from_config = entries.iter().find(|e| e.key == "command").map(|e| e.value.clone());
    let (sub_name, insert_at) = match (sub_pos, &from_config) {
        (Some(i), Some(c)) if argv[i].to_string_lossy() != c.as_str() => {
            return Err(CliError::Validation(format!(
                "config names command {c} but the command line runs {}",
                argv[i].to_string_lossy()
            )));
        }
        (Some(i), _) => (argv[i].to_string_lossy().into_owned(), i + 1),
        (None, Some(c)) => {
            argv.insert(1, OsString::from(c));
            (c.clone(), 2)
        }
        (None, None) => return Err(CliError::Usage("no subcommand given on the command line or in the config".into())),
    };
    let sub = cmd
        .find_subcommand(&sub_name)
        .ok_or_else(|| CliError::Validation(format!("unknown command {sub_name}")))?;

    let mut synthetic = Vec::new();
    for e in entries.iter().filter(|e| e.key != "command") {
        let arg = sub
            .get_arguments()
            .find(|a| a.get_long() == Some(e.key.as_str()))
            .ok_or_else(|| CliError::Validation(format!("config line {}: unknown key {} for {sub_name}", e.line, e.key)))?;
        if arg.get_action().takes_values() {
            synthetic.push(OsString::from(format!("--{}", e.key)));
            synthetic.push(OsString::from(&e.value));
        } else {
            match e.value.as_str() {
                "true" => synthetic.push(OsString::from(format!("--{}", e.key))),
                "false" => {}
                other => {
                    return Err(CliError::Validation(format!(
                        "config line {}: switch {} takes true or false, not {other}",
                        e.line, e.key
                    )))
                }
            }
        }
    }
    argv.splice(insert_at..insert_at, synthetic);
    Ok(argv)
}
