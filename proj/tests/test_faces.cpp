#include "doctest.h"
#include "qdk/faces.hpp"
#include "qdk/operad.hpp"

using namespace qdk;

TEST_CASE("named face examples") {
    auto dk = build_family(FamilyKind::DK, 2, 4);
    auto rep = verify_diagram_face(DiagramFace::TopLeft, dk.component(3));
    CHECK(rep.ok());
    CHECK(rep.cases.at(0).details == "dim R = 2");

    auto aos = aos_qd(3);
    auto rv = verify_diagram_face(DiagramFace::RightVertical, aos, {}, 3);
    CHECK(rv.ok());
    CHECK(rv.cases.at(0).details == "(1,3,2,0) = (1,3,2,0)");

    for (int n = 3; n <= 4; ++n)
        for (auto f : all_faces()) {
            const auto& q = dk.component(n);
            auto fl = face_flavors(f);
            if (std::find(fl.begin(), fl.end(), Flavor::Skew) == fl.end()) continue;
            auto r = verify_diagram_face(f, q, {}, 3);
            CHECK_MESSAGE(r.ok(), face_name(f));
        }
    CHECK_THROWS_AS(verify_diagram_face(DiagramFace::TopRight, dk.component(3)), FlavorMismatch);
    CHECK(parse_face("central-vertical") == DiagramFace::CentralVertical);
    CHECK_THROWS(parse_face("bottom"));
}

TEST_CASE("every face on random data") {
    Rng rng(101);
    for (int t = 0; t < 6; ++t)
        for (auto f : all_faces())
            for (auto fl : face_flavors(f)) {
                auto a = random_qd(rng, fl, 3, 0, 1, "x");
                auto b = random_qd(rng, fl, 2, 0, 1, "y");
                auto rep = verify_diagram_face(f, a, b, 3);
                CHECK_MESSAGE(rep.ok(), std::string(face_name(f) + " " + rep.to_json().dump()));
            }
}

TEST_CASE("series product") {
    CHECK(series_product({1, 2, 1}, {1, 1, 0}) == std::vector<std::size_t>{1, 3, 3});
}
