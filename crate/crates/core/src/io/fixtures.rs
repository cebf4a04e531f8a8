//! The hotel-booking running example.
//!
//! Clients query a broker, which checks hotels until it has a best offer and
//! then books it or declines. Privileged variants carry a necessary action.

use crate::model::{Flavor, Modality::*, Msca};

pub fn client() -> Msca {
    Msca::principal(
        "Client",
        Flavor::Orchestration,
        "c0",
        &["c0", "c3", "c4"],
        &[
            ("c0", "!qry", "c1", Permitted),
            ("c1", "?bst", "c2", Permitted),
            ("c2", "!ok", "c3", Permitted),
            ("c2", "!nok", "c4", Permitted),
        ],
    )
    .expect("fixture is valid")
}

/// Like [`client`], but its query must be served. A necessary offer only
/// exists in the choreography flavor.
pub fn privileged_client() -> Msca {
    Msca::principal(
        "PrivilegedClient",
        Flavor::Choreography,
        "c'0",
        &["c'0", "c'3", "c'4"],
        &[
            ("c'0", "!qry", "c'1", Necessary),
            ("c'1", "?bst", "c'2", Permitted),
            ("c'2", "!ok", "c'3", Permitted),
            ("c'2", "!nok", "c'4", Permitted),
        ],
    )
    .expect("fixture is valid")
}

pub fn hotel() -> Msca {
    Msca::principal(
        "Hotel",
        Flavor::Orchestration,
        "h0",
        &["h0", "h3", "h4"],
        &[
            ("h0", "?chk", "h1", Permitted),
            ("h1", "!rsp", "h2", Permitted),
            ("h2", "?bk", "h3", Permitted),
            ("h2", "?nbk", "h4", Permitted),
        ],
    )
    .expect("fixture is valid")
}

/// Like [`hotel`], but its booking request must be matched.
pub fn privileged_hotel() -> Msca {
    Msca::principal(
        "PrivilegedHotel",
        Flavor::Orchestration,
        "h'0",
        &["h'0", "h'3", "h'4"],
        &[
            ("h'0", "?chk", "h'1", Permitted),
            ("h'1", "!rsp", "h'2", Permitted),
            ("h'2", "?bk", "h'3", Necessary),
            ("h'2", "?nbk", "h'4", Permitted),
        ],
    )
    .expect("fixture is valid")
}

/// Checks hotels in a loop, forwards the best offer, then books one hotel
/// and declines the other.
pub fn broker() -> Msca {
    Msca::principal(
        "Broker",
        Flavor::Orchestration,
        "b0",
        &["b0", "b9", "b12"],
        &[
            ("b0", "?qry", "b1", Permitted),
            ("b1", "!chk", "b2", Permitted),
            ("b2", "?rsp", "b3", Permitted),
            ("b3", "!chk", "b4", Permitted),
            ("b4", "?rsp", "b5", Permitted),
            ("b5", "!chk", "b4", Permitted),
            ("b5", "!bst", "b6", Permitted),
            ("b6", "?ok", "b7", Permitted),
            ("b6", "?nok", "b10", Permitted),
            ("b7", "!bk", "b8", Permitted),
            ("b8", "!nbk", "b9", Permitted),
            ("b9", "!nbk", "b9", Permitted),
            ("b10", "!nbk", "b11", Permitted),
            ("b11", "!nbk", "b12", Permitted),
            ("b12", "!nbk", "b12", Permitted),
        ],
    )
    .expect("fixture is valid")
}

/// Client, PrivilegedClient, Broker, Hotel and PrivilegedHotel.
pub fn fixtures() -> Vec<Msca> {
    vec![
        client(),
        privileged_client(),
        broker(),
        hotel(),
        privileged_hotel(),
    ]
}

/// Operands of the orchestration scenario: two clients, the broker, a hotel
/// and the privileged hotel.
pub fn a1_operands() -> Vec<Msca> {
    vec![client(), client(), broker(), hotel(), privileged_hotel()]
}

/// Operands of the choreography scenario: a client, the privileged client,
/// the broker and two hotels, all in the choreography flavor.
pub fn a2_operands() -> Vec<Msca> {
    let chor = |a: Msca| a.with_flavor(Flavor::Choreography);
    vec![
        chor(client()),
        privileged_client(),
        chor(broker()),
        chor(hotel()),
        chor(hotel()),
    ]
}
