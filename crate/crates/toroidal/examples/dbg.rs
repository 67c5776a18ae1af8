use toroidal::fixtures;
use toroidal::homology::HomologyLabeling;
use toroidal::region::short_contractible_walks;

fn main() {
    let m = fixtures::theta();
    let hom = HomologyLabeling::new(&m).unwrap();
    for (w, r) in short_contractible_walks(&m, &hom, 6) {
        println!("walk {:?}  V={:?} E={:?} F={:?} chi={}", w, r.vertices, r.edges, r.faces, r.euler_characteristic());
    }
}
