// scratch micro-benchmark for the heaviest expanded toric basis in the sweep
use expanse::monoset::MonomialSet;
use expanse::order::TermOrder;
use expanse::polymatroid::{expand_bases, BaseSet};
use expanse::toric::{expanded_base_order, toric_gb, Budget};
use expanse::vector::ExponentVector;
use expanse::ExpansionShape;

fn main() {
    let rows: Vec<Vec<u32>> = vec![
        vec![0, 0, 3],
        vec![0, 1, 2],
        vec![0, 2, 1],
        vec![1, 0, 2],
        vec![1, 1, 1],
        vec![1, 2, 0],
    ];
    let b = BaseSet::new(
        MonomialSet::new(3, rows.into_iter().map(ExponentVector::new).collect()).unwrap(),
    )
    .unwrap();
    let alpha = ExpansionShape::new(vec![2, 2, 2]).unwrap();
    let expanded = expand_bases(&b, &alpha).unwrap();
    let order = expanded_base_order(&TermOrder::lex(3), &alpha);
    println!("expanded bases: {}", expanded.len());
    let t0 = std::time::Instant::now();
    let mut budget = Budget::new(100_000_000);
    let g = toric_gb(expanded.bases(), &order, &mut budget).unwrap();
    println!(
        "gb {} elements, {} pairs, {:?}",
        g.elements().len(),
        budget.used(),
        t0.elapsed()
    );
    expanse::toric::probe_stats::dump();
}
