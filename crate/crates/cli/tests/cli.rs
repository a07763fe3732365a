use std::io::Write;
use std::process::{Command, Stdio};

use rtam_cli::{parse_atam, parse_tileset, run_cli, serialize_tileset};
use rtam_compilers::{gen_odd_rect, gen_odd_square};

fn rtam(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_rtam"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn call(args: &[&str], stdin: &str) -> rtam_cli::Outcome {
    let argv: Vec<&str> = std::iter::once("rtam").chain(args.iter().copied()).collect();
    run_cli(argv, &mut stdin.as_bytes())
}

#[test]
fn generated_square_verifies_through_a_pipe() {
    let (code, doc, _) = rtam(&["gen-square", "5"], "");
    assert_eq!(code, 0);
    assert_eq!(parse_tileset(&doc).unwrap().system.tile_count(), 5);
    let (code, out, _) = rtam(&["verify-strict", "--shape", "square:5"], &doc);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out, "holds\n");
}

#[test]
fn wrong_shape_is_refuted_with_a_witness() {
    let doc = serialize_tileset(&gen_odd_square(5).unwrap());
    let o = call(&["verify-strict", "--shape", "square:3"], &doc);
    assert_eq!(o.code, 1);
    assert!(o.stdout.starts_with("refuted\n"));
    assert!(o.stdout.contains(":D"), "{}", o.stdout);
}

#[test]
fn escaping_enumeration_is_inconclusive() {
    let column = "version = 1\ntemperature = 1\n\n[[seed]]\ntile = \"c\"\nx = 0\ny = 0\n\n[[tile]]\nname = \"c\"\nn = { label = \"a\", strength = 1 }\ns = { label = \"a'\", strength = 1 }\n";
    let o = call(&["enumerate", "--window", "4"], column);
    assert_eq!(o.code, 2, "{}", o.stderr);
    assert!(o.stdout.contains("escaped true"));
    let o = call(&["check-directed", "--window", "4"], column);
    assert_eq!(o.code, 2);
}

#[test]
fn usage_errors_exit_above_two() {
    let (code, _, err) = rtam(&["frobnicate"], "");
    assert!(code > 2);
    assert!(err.contains("Usage"), "{err}");
    assert!(call(&["gen-square", "--bogus"], "").code > 2);
    assert!(call(&["verify-strict", "--shape", "square:3"], "not a document").code > 2);
    assert!(call(&["gen-square", "4"], "").code > 2);
    assert_eq!(call(&["--help"], "").code, 0);
}

#[test]
fn rectangles_and_weak_shapes() {
    let o = call(&["gen-rect", "3", "5"], "");
    assert_eq!(o.code, 0);
    assert_eq!(parse_tileset(&o.stdout).unwrap().system, gen_odd_rect(3, 5).unwrap());
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let plus = dir.join("plus.txt");
    std::fs::write(&plus, ".#.\n###\n.#.\n").unwrap();
    let plus = plus.to_str().unwrap();
    let o = call(&["gen-weak", "--shape", plus], "");
    assert_eq!(o.code, 0);
    assert!(!parse_tileset(&o.stdout).unwrap().black.is_empty());
    let v = call(&["verify-weak", "--shape", plus], &o.stdout);
    assert_eq!(v.code, 0, "{} {}", v.stdout, v.stderr);
    let ell = dir.join("ell.json");
    std::fs::write(&ell, "[[0,0],[1,0],[0,1]]").unwrap();
    assert_eq!(call(&["gen-weak", "--shape", ell.to_str().unwrap()], "").code, 1);
}

#[test]
fn eps_commands() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let bar = dir.join("bar.txt");
    std::fs::write(&bar, "####\n").unwrap();
    let bar = bar.to_str().unwrap();
    let o = call(&["check-eps", "--shape", bar], "");
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.lines().count(), 4);
    let o = call(&["compile-eps", "--shape", bar], "");
    assert_eq!(o.code, 0);
    let v = call(&["verify-strict", "--shape", bar], &o.stdout);
    assert_eq!(v.code, 0);
    assert_eq!(call(&["check-mismatch-free"], &o.stdout).code, 0);
    let hooks = dir.join("hooks.txt");
    std::fs::write(&hooks, "#...\n####\n...#\n").unwrap();
    assert_eq!(call(&["check-eps", "--shape", hooks.to_str().unwrap()], "").code, 1);
}

#[test]
fn scale2_and_zigzag_commands() {
    let o = call(&["compile-scale2", "--shape", "rect:2x1"], "");
    assert_eq!(o.code, 0, "{}", o.stderr);
    let v = call(&["verify-strict", "--shape", "rect:4x2"], &o.stdout);
    assert_eq!(v.code, 0);
    let c = call(&["gen-counter", "2"], "");
    assert_eq!(c.code, 0);
    parse_atam(&c.stdout).unwrap();
    let z = call(&["convert-zigzag"], &c.stdout);
    assert_eq!(z.code, 0, "{}", z.stderr);
    let sys = parse_tileset(&z.stdout).unwrap().system;
    assert_eq!(sys.temperature, 2);
    assert_eq!(call(&["check-directed", "--window", "12"], &z.stdout).code, 0);
}

#[test]
fn path_commands() {
    // A three-tile east-west path whose middle tile also binds north.
    let doc = "version = 1\ntemperature = 1\n\n[[seed]]\ntile = \"s\"\nx = 0\ny = 0\n\n\
        [[tile]]\nname = \"s\"\ne = { label = \"a\", strength = 1 }\n\n\
        [[tile]]\nname = \"m\"\nw = { label = \"a'\", strength = 1 }\nn = { label = \"b\", strength = 1 }\n\n\
        [[tile]]\nname = \"t\"\ns = { label = \"b'\", strength = 1 }\n";
    let o = call(&["stretch", "--from", "0,0", "--to", "1,1", "--mode", "NE"], doc);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert!(o.stdout.contains("ew bonds 1"));
    assert!(o.stdout.contains("extent 2x2"));
    let o = call(&["pump", "--from", "0,0", "--to", "1,1"], doc);
    assert_eq!(o.code, 1);
    let o = call(&["simulate", "--format", "svg"], doc);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.matches("<rect").count(), 3);
}

#[test]
fn periodic_structure_of_a_ray() {
    let ray = "version = 1\ntemperature = 1\n\n[[seed]]\ntile = \"c\"\nx = 0\ny = 0\n\n[[tile]]\nname = \"c\"\ne = { label = \"a\", strength = 1 }\nw = { label = \"a'\", strength = 1 }\n";
    let o = call(&["periodic-structure"], ray);
    assert_eq!(o.code, 0, "{} {}", o.stdout, o.stderr);
    assert!(o.stdout.contains("validation missing 0 extra 0"));
}

#[test]
fn seed_reflection_flag_applies() {
    let doc = serialize_tileset(&gen_odd_square(3).unwrap());
    let o = call(&["simulate", "--seed-reflection", "B"], &doc);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains(":B*"), "{}", o.stdout);
    assert!(call(&["simulate", "--seed-reflection", "Q"], &doc).code > 2);
}
