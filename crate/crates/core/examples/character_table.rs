// Character table of S_5 from the determinantal formula, checked against
// column orthogonality and Young's rule.

use permspectra::characters::{young_rule, CharacterTable};
use permspectra::partitions::{dimension, hook_lengths};
use permspectra::render::CharacterTableDoc;
use permspectra::Partition;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let table = CharacterTable::new(5);
    let doc = CharacterTableDoc::new(&table);
    assert!(doc.orthogonality_ok);
    print!("{}", doc.to_csv()?);

    let alpha: Partition = "[3,2]".parse()?;
    let hooks = hook_lengths(&alpha);
    println!("hooks of {alpha}: {:?}, f = {}", hooks.rows, dimension(&alpha));

    let beta: Partition = "[3,1,1]".parse()?;
    for (irrep, k) in young_rule(&beta)? {
        println!("xi{beta} contains chi{irrep} with multiplicity {k}");
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
