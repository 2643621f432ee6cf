use eqdeg::enumerator::Enumeration;
use std::time::Instant;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    for v in 1..=max {
        let t = Instant::now();
        let c = Enumeration::new(v).unwrap().count().unwrap();
        println!("{v} {c} {:.2}s", t.elapsed().as_secs_f64());
    }
}
