//! The two interval partitions used during refinement.

use simonk::{IntervalSplitFind, IntervalUnionFind};

fn main() -> Result<(), simonk::Error> {
    let mut sf = IntervalSplitFind::new(12);
    for u in [3, 7, 7, 10] {
        sf.split(u)?; // a repeated split is a no-op
    }
    let parts: Vec<(u32, u32)> = [1, 4, 8, 11]
        .iter()
        .map(|&u| sf.find(u))
        .collect::<Result<_, _>>()?;
    println!("split-find after splits at 3, 7, 10: {parts:?}");

    let mut uf = IntervalUnionFind::new(8);
    uf.union(2)?;
    uf.union(3)?;
    uf.union(6)?;
    println!(
        "union-find: 3 in {:?}, 7 in {:?}, 5 in {:?}",
        uf.find(3)?,
        uf.find(7)?,
        uf.find(5)?
    );
    // only the last position of an interval can be merged rightwards
    println!("union at 2 again: {:?}", uf.union(2).unwrap_err());
    Ok(())
}
