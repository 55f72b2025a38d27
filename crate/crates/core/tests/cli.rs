//! Command-line behaviour: exit codes, artifacts, determinism and
//! rejection of corrupted certificates.

use std::fs;
use std::path::Path;
use std::process::Command;

use linegraph_hd::cli::run;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

fn lghd(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["lghd".to_string()];
    argv.extend(args.iter().map(|a| {
        if a.ends_with(".g") || a.contains('.') && !a.starts_with('-') {
            dir.join(a).to_string_lossy().into_owned()
        } else {
            a.to_string()
        }
    }));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn separating_transitions_of_gadget_ring() {
    let d = TempDir::new().unwrap();
    let (c, _, _) = lghd(d.path(), &["construct", "xkt", "--k", "3", "--t", "4", "-o", "x34.g"]);
    assert_eq!(c, 0);
    let (c, out, _) = lghd(d.path(), &["transitions", "x34.g", "--separating"]);
    assert_eq!((c, out.as_str()), (0, "0 separating transitions\n"));
    let (c, out, _) = lghd(d.path(), &["transitions", "x34.g"]);
    assert_eq!(c, 0);
    assert!(out.ends_with("84 transitions\n"));
}

#[test]
fn bridged_graph_has_separating_transitions() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "bridged", "-o", "b.g"]);
    let (c, out, _) = lghd(d.path(), &["transitions", "b.g", "--separating"]);
    assert_eq!(c, 0);
    let n: usize = out.lines().last().unwrap().split(' ').next().unwrap().parse().unwrap();
    assert!(n > 0);
    assert_eq!(out.lines().count(), n + 1);
}

#[test]
fn perfect_euler_round_trip() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "complete", "--n", "5", "-o", "k5.g"]);
    let (c, out, _) = lghd(d.path(), &["solve", "perfect-euler", "k5.g", "-o", "k5.tours"]);
    assert_eq!(c, 0);
    assert!(out.starts_with("outcome found nodes "));
    let cert = fs::read_to_string(d.path().join("k5.tours")).unwrap();
    assert!(cert.starts_with("eulertours K5 3\n"));
    assert_eq!(cert.lines().count(), 4);
    let (c, out, _) = lghd(d.path(), &["verify", "k5.g", "k5.tours"]);
    assert_eq!(c, 0);
    assert!(out.starts_with("pass: perfect set of 3 Euler tours"));
}

#[test]
fn audit_theorem1_passes() {
    let d = TempDir::new().unwrap();
    let (c, out, _) = lghd(d.path(), &["audit", "theorem1", "--k", "3", "--t", "4"]);
    assert_eq!(c, 0);
    assert!(!out.contains("FAIL"));
    assert!(out.ends_with("18/18 claims pass\n"));
}

#[test]
fn audit_theorem4_passes_and_detects_bad_labels() {
    let d = TempDir::new().unwrap();
    let (c, _, _) = lghd(d.path(), &["audit", "theorem4", "--k", "4"]);
    assert_eq!(c, 0);
    lghd(d.path(), &["construct", "theorem4", "--k", "4", "-o", "t4.g"]);
    let text = fs::read_to_string(d.path().join("t4.g")).unwrap();
    let broken: String = text
        .lines()
        .map(|l| if l.starts_with("cutset C 2 ") { "cutset C 2 0,1" } else { l })
        .collect::<Vec<_>>()
        .join("\n");
    fs::write(d.path().join("bad.g"), broken).unwrap();
    let (c, out, _) = lghd(d.path(), &["audit", "theorem4", "--family", "bad.g"]);
    assert_eq!(c, 1);
    assert!(out.contains("not an edge cut"), "{out}");
}

#[test]
fn exhausted_search_exits_one() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "petersen", "-o", "p.g"]);
    let (c, out, _) = lghd(d.path(), &["solve", "hamilton", "p.g", "-o", "p.cycle"]);
    assert_eq!(c, 1);
    assert!(out.starts_with("outcome exhausted nodes "));
    assert!(!d.path().join("p.cycle").exists());
    let (c, out, _) = lghd(d.path(), &["solve", "decomposition", "p.g"]);
    assert_eq!(c, 1);
    assert!(out.starts_with("outcome exhausted"));
}

#[test]
fn budget_exceeded_is_reported() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "xkt", "--k", "3", "--t", "4", "-o", "x.g"]);
    let (c, out, _) = lghd(d.path(), &["solve", "decomposition", "x.g", "--budget-nodes", "10"]);
    assert_eq!(c, 1);
    assert!(out.starts_with("outcome budget_exceeded nodes 11"), "{out}");
    let (c, _, err) = lghd(d.path(), &["solve", "hamilton", "x.g", "--budget-nodes", "0"]);
    assert_eq!(c, 2);
    assert!(err.contains("budget"));
}

#[test]
fn usage_errors_exit_two() {
    let d = TempDir::new().unwrap();
    assert_eq!(lghd(d.path(), &["construct", "nosuch"]).0, 2);
    assert_eq!(lghd(d.path(), &["construct", "xkt"]).0, 2);
    assert_eq!(lghd(d.path(), &["construct", "xkt", "--k", "2", "--t", "4"]).0, 2);
    assert_eq!(lghd(d.path(), &["frobnicate"]).0, 2);
    assert_eq!(lghd(d.path(), &["verify", "missing.g", "missing.dec"]).0, 2);
    fs::write(d.path().join("junk.g"), "graph j 2 1\nedge 0 0 5\n").unwrap();
    let (c, _, err) = lghd(d.path(), &["linegraph", "junk.g"]);
    assert_eq!(c, 2);
    assert!(err.contains("line 2"));
    assert_eq!(lghd(d.path(), &["--help"]).0, 0);
}

#[test]
fn decomposition_constraints_and_dot() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "complete", "--n", "4", "-o", "k4.g"]);
    let (c, _, _) = lghd(d.path(), &["solve", "decomposition", "k4.g", "--etc-everywhere"]);
    assert_eq!(c, 1);
    let (c, _, _) = lghd(
        d.path(),
        &["solve", "decomposition", "k4.g", "--etc-off", "0,5", "-o", "k4.dec", "--dot", "k4.dot"],
    );
    assert_eq!(c, 0);
    let dot = fs::read_to_string(d.path().join("k4.dot")).unwrap();
    assert!(dot.starts_with("graph \"L_K4\""));
    assert_eq!(dot.matches("tooltip=\"cycle").count(), 12);
    let (c, out, _) = lghd(d.path(), &["verify", "k4.g", "k4.dec"]);
    assert_eq!(c, 0);
    assert!(out.contains("2 edge-disjoint Hamilton cycles"));
    let (c, out, _) = lghd(d.path(), &["export", "k4.g", "--cert", "k4.dec"]);
    assert_eq!(c, 0);
    assert!(out.contains("L_K4"));
    lghd(d.path(), &["construct", "theorem4", "--k", "4", "-o", "t4.g"]);
    let (_, out, _) = lghd(d.path(), &["export", "t4.g"]);
    assert_eq!(out.matches("style=dashed").count(), 6);
}

#[test]
fn splice_command_joins_two_decompositions() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "complete", "--n", "5", "-o", "k5.g"]);
    lghd(d.path(), &["solve", "perfect-euler", "k5.g", "-o", "k5.tours"]);
    let (c, out, _) = lghd(
        d.path(),
        &[
            "splice", "k5.g", "k5.tours", "k5.g", "k5.tours", "--uv", "3", "--upvp", "7", "-o", "y.dec",
            "--graph-out", "y.g",
        ],
    );
    assert_eq!(c, 0, "{out}");
    assert!(out.contains("3 Hamilton cycles"));
    let (c, out, _) = lghd(d.path(), &["verify", "y.g", "y.dec"]);
    assert_eq!(c, 0);
    assert!(out.contains("on 20 vertices"));
}

#[test]
fn pipelines_pass() {
    let d = TempDir::new().unwrap();
    let dir = d.path().join("t4");
    let dir = dir.to_str().unwrap();
    let (c, out, _) = lghd(d.path(), &["pipeline", "theorem4", "--k", "4", "--dir", dir]);
    assert_eq!(c, 0, "{out}");
    assert!(out.ends_with("pipeline: pass\n"));
    for f in ["theorem4_k4.g", "theorem4_k4.hamilton", "K5.tours", "theorem4_k4_splice2.dec", "theorem4_k4.dec"] {
        assert!(Path::new(dir).join(f).exists(), "{f}");
    }
    let g = Path::new(dir).join("theorem4_k4.g");
    let cert = Path::new(dir).join("theorem4_k4.dec");
    let (c, _, _) = lghd(d.path(), &["verify", g.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_eq!(c, 0);

    let dir1 = d.path().join("t1");
    let (c, out, _) = lghd(d.path(), &["pipeline", "theorem1", "--k", "3", "--dir", dir1.to_str().unwrap()]);
    assert_eq!(c, 0, "{out}");
    assert!(out.contains("transitions: 0 of 84 separating"));
}

#[test]
fn identical_arguments_give_identical_output() {
    let d = TempDir::new().unwrap();
    lghd(d.path(), &["construct", "complete", "--n", "5", "-o", "k5.g"]);
    for args in [
        vec!["solve", "perfect-euler", "k5.g"],
        vec!["solve", "decomposition", "k5.g", "--etc-everywhere"],
        vec!["construct", "xkt", "--k", "4"],
        vec!["audit", "theorem1", "--k", "4", "--t", "4"],
    ] {
        let a = lghd(d.path(), &args);
        let b = lghd(d.path(), &args);
        assert_eq!(a, b);
    }
}

#[test]
fn binary_exit_codes() {
    let d = TempDir::new().unwrap();
    let bin = env!("CARGO_BIN_EXE_lghd");
    let p = d.path().join("p.g");
    let o = Command::new(bin).args(["construct", "petersen", "-o"]).arg(&p).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let o = Command::new(bin).args(["solve", "hamilton"]).arg(&p).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("exhausted"));
    let o = Command::new(bin).args(["solve", "hamilton"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

/// Every certificate is mutated one token at a time; `verify` must reject
/// each mutant with an error naming a line.
#[test]
fn mutated_certificates_are_rejected() {
    let d = TempDir::new().unwrap();
    let p = d.path();
    lghd(p, &["construct", "complete", "--n", "5", "-o", "k5.g"]);
    lghd(p, &["construct", "complete", "--n", "4", "-o", "k4.g"]);
    lghd(p, &["construct", "k33", "-o", "k33.g"]);
    assert_eq!(lghd(p, &["solve", "perfect-euler", "k5.g", "-o", "k5.tours"]).0, 0);
    assert_eq!(lghd(p, &["solve", "decomposition", "k5.g", "-o", "k5.dec"]).0, 0);
    assert_eq!(lghd(p, &["solve", "decomposition", "k4.g", "-o", "k4.dec"]).0, 0);
    assert_eq!(lghd(p, &["solve", "hamilton", "k33.g", "-o", "k33.cycle"]).0, 0);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tried = 0;
    for (graph, cert) in [("k5.g", "k5.tours"), ("k5.g", "k5.dec"), ("k4.g", "k4.dec"), ("k33.g", "k33.cycle")] {
        let text = fs::read_to_string(p.join(cert)).unwrap();
        assert_eq!(lghd(p, &["verify", graph, cert]).0, 0);
        let lines: Vec<Vec<&str>> = text.lines().map(|l| l.split(' ').collect()).collect();
        for (li, toks) in lines.iter().enumerate() {
            for ti in 0..toks.len() {
                let old = toks[ti];
                let mut replacements = vec!["zz".to_string(), "-1".to_string()];
                if let Ok(v) = old.trim_end_matches(':').parse::<usize>() {
                    let colon = if old.ends_with(':') { ":" } else { "" };
                    replacements.push(format!("{}{colon}", v + 1));
                    if v > 0 {
                        replacements.push(format!("{}{colon}", v - 1));
                    }
                    replacements.push(format!("{}{colon}", rng.gen_range(0..12)));
                } else {
                    replacements.push(format!("{old}x"));
                }
                for new in replacements {
                    if new == old {
                        continue;
                    }
                    let mutated: String = lines
                        .iter()
                        .enumerate()
                        .map(|(lj, t)| {
                            let mut t = t.clone();
                            if lj == li {
                                t[ti] = &new;
                            }
                            t.join(" ") + "\n"
                        })
                        .collect();
                    fs::write(p.join("mutant.cert"), &mutated).unwrap();
                    let (c, out, _) = lghd(p, &["verify", graph, "mutant.cert"]);
                    assert_eq!(c, 1, "accepted mutant of {cert} line {} token {}: {new}\n{mutated}", li + 1, ti + 1);
                    assert!(out.starts_with("fail: ") && out.contains("line "), "{out}");
                    tried += 1;
                }
            }
        }
    }
    assert!(tried > 300, "{tried}");
}
