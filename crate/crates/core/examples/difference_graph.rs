//! Build the difference graph of two snapshots, inspect it, flip it, and
//! collapse its weights into co-authorship bands.

use dcs::difference::{flip_signs, transform_weights};
use dcs::{build_difference, parse_edge_list, write_edge_list, WeightTransform};

fn main() -> dcs::Result<()> {
    let before = parse_edge_list(
        "alice bob 6\n\
         alice carol 1\n\
         bob dave 3\n",
    )?;
    let after = parse_edge_list(
        "alice bob 1\n\
         alice carol 4\n\
         carol erin 7\n\
         bob dave 3\n",
    )?;

    let emerging = build_difference(&before, &after, 1.0);
    println!("D = A2 - A1:");
    write_edge_list(emerging.graph(), std::io::stdout().lock())?;
    println!("{}", emerging.stats());

    let vanishing = flip_signs(&emerging);
    println!("flipped:");
    write_edge_list(vanishing.graph(), std::io::stdout().lock())?;

    let banded = transform_weights(&emerging, &WeightTransform::coauthor_bands())?;
    println!("banded:");
    write_edge_list(banded.graph(), std::io::stdout().lock())?;
    Ok(())
}
