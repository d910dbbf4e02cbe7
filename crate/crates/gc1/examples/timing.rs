use gc1::selftest::*;
use std::time::Instant;

fn main() {
    let cfg = SelftestConfig::default();
    for (name, f) in checks() {
        let t = Instant::now();
        let r = f(&cfg);
        println!("{:30} {:>8.2?}  {}", name, t.elapsed(), if r.passed { "ok" } else { "FAIL" });
    }
}
