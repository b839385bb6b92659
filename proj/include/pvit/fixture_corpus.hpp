#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pvit/fixture.hpp"
#include "pvit/image.hpp"

namespace pvit {

// Declarative description of one synthetic scene. Persons are painted with
// exact palette shirt colors; annotations mirror the painted boxes, so the
// annotation file doubles as the detection oracle.
struct FixtureSceneSpec {
  struct Person {
    BBox box;          // person box in scene coordinates
    double score = 0.9;
    bool with_face = true;  // when false the face annotation is withheld
    int palette = 0;        // index into fixture_palette()
  };

  std::string name;  // file stem, e.g. "scene_000"
  int width = 320;
  int height = 240;
  int sky_tone = 0;  // background variation
  std::vector<Person> persons;
};

Image render_fixture_scene(const FixtureSceneSpec& spec);

// The face box implied by a person box (painted and annotated identically).
BBox fixture_face_box(const BBox& person);

// Writes <name>.png per scene plus annotations.json into `dir`.
void write_fixture_corpus(const std::filesystem::path& dir,
                          const std::vector<FixtureSceneSpec>& specs);

// Canonical two-person scene (scores 0.95 / 0.90): a red-shirted figure and a
// blue-shirted one, both with faces.
FixtureSceneSpec two_people_spec(const std::string& name = "two_people");

// Deterministic desk-scale corpus; person counts cycle through 2,1,3,...
// `variant` shifts positions and palette so different corpora never share
// image bytes.
std::vector<FixtureSceneSpec> default_corpus_specs(int n_scenes, const std::string& stem_prefix,
                                                   int variant);

}  // namespace pvit
