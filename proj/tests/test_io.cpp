#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "latpack/catalog.hpp"
#include "latpack/io.hpp"

using namespace latpack;
using namespace latpack::testing;

TEST_CASE("lattice files round-trip") {
    for (const Lattice& l : {z_lattice(3), a2(), e8(), mcc()}) {
        std::string text = lattice_to_json(l);
        Lattice back = lattice_from_json(text);
        CHECK(back.name() == l.name());
        CHECK(back.gram() == l.gram());
        // Stable bytes: serializing the parse reproduces the file.
        CHECK(lattice_to_json(back) == text);
    }
    CHECK(lattice_to_json(z_lattice(2)).find("\"field\": \"Q\"") != std::string::npos);
    CHECK(lattice_to_json(mcc()).find("\"field\": \"Q(sqrt2)\"") != std::string::npos);
    CHECK(lattice_to_json(mcc()).find('\r') == std::string::npos);
}

TEST_CASE("packing files round-trip") {
    PeriodicPacking p = d_plus(9);
    std::string text = packing_to_json(p);
    PeriodicPacking back = packing_from_json(text);
    CHECK(back.name() == p.name());
    CHECK(back.base().gram() == p.base().gram());
    CHECK(back.offsets() == p.offsets());
    CHECK(packing_to_json(back) == text);

    // A plain lattice file loads as a one-class packing; the converse is
    // rejected rather than silently dropping the offsets.
    PeriodicPacking one = packing_from_json(lattice_to_json(a2()));
    CHECK(one.offsets().size() == 1);
    CHECK_THROWS_AS(lattice_from_json(text), IoError);
}

TEST_CASE("malformed lattice files are rejected") {
    CHECK_THROWS_AS(lattice_from_json("not json"), IoError);
    CHECK_THROWS_AS(lattice_from_json("{\"name\": \"x\", \"dim\": 1}"), IoError);
    CHECK_THROWS_AS(lattice_from_json(
                        "{\"name\": \"x\", \"dim\": 1, \"field\": \"R\", \"gram\": [[\"1\"]]}"),
                    IoError);
    // Entries must be exact strings, not floats.
    CHECK_THROWS_AS(
        lattice_from_json("{\"name\": \"x\", \"dim\": 1, \"field\": \"Q\", \"gram\": [[1.0]]}"),
        IoError);
    CHECK_THROWS_AS(lattice_from_json(
                        "{\"name\": \"x\", \"dim\": 2, \"field\": \"Q\", \"gram\": [[\"1\"]]}"),
                    IoError);
    CHECK_THROWS_AS(
        lattice_from_json(
            "{\"name\": \"x\", \"dim\": 1, \"field\": \"Q\", \"gram\": [[\"1*sqrt2\"]]}"),
        IoError);
    CHECK_THROWS_AS(
        lattice_from_json(
            "{\"name\": \"x\", \"dim\": 1, \"field\": \"Q\", \"gram\": [[\"one\"]]}"),
        IoError);
}

TEST_CASE("code files round-trip") {
    for (const BinaryCode& c : {golay24(), qr18(), best10()}) {
        std::string text = code_to_text(c);
        BinaryCode back = code_from_text(text);
        CHECK(back.length() == c.length());
        CHECK(back.is_linear() == c.is_linear());
        CHECK(back.words() == c.words());
        CHECK(code_to_text(back) == text);
    }
    CHECK(code_to_text(golay24()).substr(0, 6) == "24 12\n");
    CHECK(code_to_text(best10()).substr(0, 13) == "10 nonlinear\n");
}

TEST_CASE("malformed code files are rejected") {
    CHECK_THROWS_AS(code_from_text(""), IoError);
    CHECK_THROWS_AS(code_from_text("banana\n0\n"), IoError);
    CHECK_THROWS_AS(code_from_text("2 1\n000\n"), IoError);
    CHECK_THROWS_AS(code_from_text("2 1\n0x\n"), IoError);
    CHECK_THROWS_AS(code_from_text("2 1\n"), IoError);
    // Dimension in the header must match the span of the listed words.
    CHECK_THROWS_AS(code_from_text("2 2\n00\n11\n"), IoError);
    // Words that are not closed under xor cannot claim linearity.
    CHECK_THROWS_AS(code_from_text("2 1\n01\n10\n"), IoError);
}

TEST_CASE("saving and loading files") {
    std::string lat_path = "io_test_lattice.json";
    std::string code_path = "io_test_code.txt";
    save_lattice(d4(), lat_path);
    CHECK(load_lattice(lat_path).gram() == d4().gram());
    save_packing(d_plus(5), lat_path);
    CHECK(load_packing(lat_path).offsets().size() == 2);
    save_code(qr18(), code_path);
    CHECK(load_code(code_path).words() == qr18().words());
    CHECK_THROWS_AS(load_lattice("no_such_directory/x.json"), IoError);
    std::remove(lat_path.c_str());
    std::remove(code_path.c_str());
}
