// Writing and reading the JSON graph, configuration and group formats.

use sandpile::io::{graph_json, group_json, parse_config, parse_graph, render};
use sandpile::{cone, cycle_graph, Sandpile};

pub fn run_example() -> sandpile::Result<()> {
    let g = cone(&cycle_graph(3), 2)?;
    let text = render(&graph_json(g.graph(), Some(g.sink_label())));
    print!("{text}");

    let back = parse_graph(&text)?;
    let pile = Sandpile::new(back.sinked(None)?)?;
    print!("{}", render(&group_json(pile.structure())));

    let c = parse_config("[5, 0, 1]")?;
    println!("{:?} stabilizes to {:?}", c, pile.stabilize(&c)?.stable);
    Ok(())
}

fn main() {
    run_example().unwrap();
}
