//! The lattice bodies everything else is computed from: the polytope at
//! infinity, the Newton polytope of f minus its constant term, the
//! bifurcation polyhedron, and the face data attached to a coordinate
//! subspace.

use monozeta::newton::{
    bifurcation_polyhedron, bif_compact_facets, convenience_profile, faces_at_infinity,
    gamma_infinity, relevant_subsets,
};
use monozeta::polyio::parse_polynomial;

fn main() -> monozeta::Result<()> {
    let vars: Vec<String> = ["x", "y"].iter().map(|s| s.to_string()).collect();
    let f = parse_polynomial("x - x^2*y", &vars)?;
    let all = [0, 1];

    let p = convenience_profile(&f);
    println!("f = x - x^2*y");
    println!("  condition (*)      : {}", p.condition_star);
    println!("  convenient         : {}", p.convenient);
    println!("  quasi-convenient   : {}", p.quasi_convenient);
    println!("  relevant subsets S : {:?}", relevant_subsets(&f));

    let g = gamma_infinity(&f, &all)?;
    println!("  polytope at infinity: vertices {:?}", g.vertices());

    let q = bifurcation_polyhedron(&f, &all)?;
    println!(
        "  bifurcation body   : points {:?} rays {:?}",
        q.generator_points(),
        q.generator_rays()
    );

    // Facets not through the origin carry the monodromy at infinity. Each
    // reports its lattice distance (value) and normalized face volume.
    let report = faces_at_infinity(&f, &all)?;
    for face in &report.faces {
        println!(
            "  face at infinity   : normal {} distance {} volume {}",
            face.normal, face.value, face.norm_volume
        );
    }

    // Compact facets of the bifurcation body, classified against the
    // orthant; these drive the zeta function of the central fiber.
    let report = bif_compact_facets(&f, &all)?;
    let classes = report.classification.as_ref().unwrap();
    for (face, class) in report.faces.iter().zip(classes) {
        println!(
            "  compact bif facet  : normal {} value {} volume {} [{}]",
            face.normal, face.value, face.norm_volume, class
        );
    }
    Ok(())
}
