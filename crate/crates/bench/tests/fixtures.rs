use liehess_bench::{ideals, orbits, structure_table};

#[test]
fn fixtures_cover_the_g2_grid() {
    let st = structure_table("G2");
    assert_eq!(orbits(&st).len(), 5);
    assert_eq!(ideals(&st).len(), 8);
}

#[test]
fn exceptional_fixtures_have_their_orbits() {
    assert_eq!(orbits(&structure_table("F4")).len(), 1);
    assert_eq!(orbits(&structure_table("E6")).len(), 1);
}
