//! Links, restrictions, reduced homology and the Alexander dual of the hollow triangle.

use symreg::cohomology::reg_links;
use symreg::combinatorics::{SimplicialComplex, VertexSet};
use symreg::exactalg::{reduced_homology_dims, FieldSpec};

fn main() -> symreg::Result<()> {
    let triangle = SimplicialComplex::from_lists(3, &[vec![1, 2], vec![2, 3], vec![1, 3]])?;
    println!("facets: {:?}", triangle.facet_lists());
    println!("homology over Q: {:?}", reduced_homology_dims(&triangle, FieldSpec::rationals())?);

    for sigma in [VertexSet::EMPTY, VertexSet::of(&[1]), VertexSet::of(&[1, 2])] {
        let lk = triangle.link(sigma);
        println!("lk {sigma:?} = {:?}", lk.facet_lists());
    }
    println!(
        "restriction to {{1,3}}: {:?}",
        triangle.restriction(VertexSet::of(&[1, 3])).facet_lists()
    );
    println!("is cone: {}, is matroid: {}", triangle.is_cone(), triangle.is_matroid());
    println!("reg(R/I) from links: {}", reg_links(&triangle, FieldSpec::rationals())?);

    let dual = triangle.alexander_dual()?;
    println!("Alexander dual: {:?}", dual.facet_lists());
    Ok(())
}
