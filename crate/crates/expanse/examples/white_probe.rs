// scratch probe: the full exhaustive double-swap sweep at acceptance scale
use expanse::harness::suite_white;

fn main() {
    let t0 = std::time::Instant::now();
    let report = suite_white(4, 3, 6).unwrap();
    println!(
        "white sweep: {} valid base sets, {} violations, {:?}",
        report.instances,
        report.violations.len(),
        t0.elapsed()
    );
    for v in report.violations.iter().take(5) {
        println!("  {v}");
    }
}
