use std::process::Command;

use semiclass::verify::run_suite;

fn selftest_stdout() -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_semiclass"))
        .arg("selftest")
        .env_remove("SEMICLASS_CONVENTIONS")
        .output()
        .expect("the semiclass binary runs");
    (out.status.code(), out.stdout)
}

fn main() {
    let mut criteria = run_suite();
    let (code_a, a) = selftest_stdout();
    let (code_b, b) = selftest_stdout();
    let same = a == b && !a.is_empty();
    let exit_ok = code_a == code_b && code_a.is_some();
    if let Some(c12) = criteria.iter_mut().find(|c| c.id == 12) {
        c12.pass &= same && exit_ok;
        c12.detail += &format!(
            "; two selftest processes give identical stdout ({} bytes) {}",
            a.len(),
            if same { "ok" } else { "WRONG" }
        );
    }
    for c in &criteria {
        println!("{}", c.line());
    }
    let failed: Vec<u8> = criteria.iter().filter(|c| !c.pass).map(|c| c.id).collect();
    let passed = criteria.len() - failed.len();
    println!("acceptance: {passed}/{} criteria pass", criteria.len());
    if criteria.len() != 12 || !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
