//! Shared helpers for driving the `tripart` binary.

#![allow(dead_code)]

use std::process::{Command, Output};

use serde_json::{json, Value};

pub fn tripart(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tripart"))
        .args(args)
        .env_remove("TRIPART_THREADS")
        .output()
        .expect("spawn tripart")
}

/// Stdout of a successful run.
pub fn stdout(args: &[&str]) -> String {
    let out = tripart(args);
    assert!(
        out.status.success(),
        "tripart {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

/// Parses `n,value,...` CSV rows, dropping the header.
pub fn csv_rows(text: &str) -> Vec<Vec<u64>> {
    text.lines()
        .skip(1)
        .map(|line| {
            line.split(',')
                .map(|f| f.parse().expect("integer field"))
                .collect()
        })
        .collect()
}

/// Expected output of one invocation.
pub enum Expect {
    /// Every key listed must be present with an equal value.
    JsonFields(Value),
    Text(&'static str),
}

pub struct Golden {
    pub name: &'static str,
    pub args: Vec<&'static str>,
    pub expect: Expect,
}

const HUGE: &str = "5^576,4^1037,3^1037,2^1036,1^1037";

pub fn goldens() -> Vec<Golden> {
    use Expect::*;
    let g = |name, args: &[&'static str], expect| Golden {
        name,
        args: args.to_vec(),
        expect,
    };
    vec![
        g(
            "join of 86531 and 433322111",
            &["lattice", "join", "8,6,5,3,1", "4,3,3,3,2,2,1,1,1"],
            JsonFields(
                json!({"canonical": "8,7,6,5,4,3,2,1,1", "partition": [8, 7, 6, 5, 4, 3, 2, 1, 1]}),
            ),
        ),
        g(
            "chi of 12,9,7,4,1",
            &["encode", "chi", "12,9,7,4,1"],
            JsonFields(json!({"m": 1, "d": 2, "w": "1011"})),
        ),
        g(
            "xi of (1, 2, 1011)",
            &["decode", "chi", "1", "2", "1011"],
            JsonFields(json!({"partition": [12, 9, 7, 4, 1], "size": 33})),
        ),
        g(
            "huge partition by reduction",
            &["removable", HUGE, "--method", "reduction"],
            JsonFields(json!({"removable": [[3, 2650]]})),
        ),
        g(
            "huge partition by hull",
            &["removable", HUGE],
            JsonFields(json!({"removable": [[3, 2650]]})),
        ),
        g(
            "omega of 86531",
            &["encode", "omega", "8,6,5,3,1"],
            JsonFields(json!({"word": "10110101"})),
        ),
        g(
            "omega inverse of 10110101",
            &["decode", "omega", "10110101"],
            JsonFields(json!({"partition": [8, 6, 5, 3, 1]})),
        ),
        g(
            "cells of 75421",
            &["check", "7,5,4,2,1"],
            JsonFields(
                json!({"triangular": true, "removable": [[7, 1], [1, 5]], "addable": [[6, 2], [3, 4]]}),
            ),
        ),
        g(
            "cells of 65421",
            &["check", "6,5,4,2,1"],
            JsonFields(json!({"triangular": true, "removable": [[4, 3]]})),
        ),
        g(
            "cells of 65321",
            &["check", "6,5,3,2,1"],
            JsonFields(json!({"triangular": true, "removable": [[5, 2], [1, 5]]})),
        ),
        g(
            "86531 is triangular and wide",
            &["check", "8,6,5,3,1"],
            JsonFields(json!({"triangular": true, "wide": true})),
        ),
        g(
            "86331 is not triangular",
            &["check", "8,6,3,3,1"],
            JsonFields(json!({"triangular": false})),
        ),
        g(
            "empty partition",
            &["check", ""],
            JsonFields(json!({"triangular": true, "removable": [], "addable": [[1, 1]]})),
        ),
        g(
            "balanced words up to length 4",
            &["balanced", "count", "--max-len", "4"],
            Text("len,count\n1,2\n2,4\n3,8\n4,14\n"),
        ),
    ]
}

/// `Err` describes the first mismatch.
pub fn check_golden(golden: &Golden) -> Result<(), String> {
    let out = tripart(&golden.args);
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ));
    }
    let text = String::from_utf8_lossy(&out.stdout);
    match &golden.expect {
        Expect::Text(expected) => (text == *expected)
            .then_some(())
            .ok_or_else(|| format!("got {text:?}")),
        Expect::JsonFields(expected) => {
            let actual: Value =
                serde_json::from_str(&text).map_err(|e| format!("bad JSON {text:?}: {e}"))?;
            let fields = expected.as_object().expect("object golden");
            for (key, value) in fields {
                if actual.get(key) != Some(value) {
                    return Err(format!(
                        "{key}: expected {value}, got {:?}",
                        actual.get(key)
                    ));
                }
            }
            Ok(())
        }
    }
}
