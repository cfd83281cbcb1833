// Copyright 2026 The ACT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "act/ingest/synthetic.h"

#include <array>
#include <cstdio>

namespace act::ingest {

namespace {

constexpr SyntheticPlace kPlaces[] = {
    {"Sydney", 151.2093, -33.8688},         {"North Sydney", 151.2070, -33.8390},
    {"Blue Mountains", 150.3119, -33.7150}, {"Katoomba", 150.3119, -33.7127},
    {"Springwood", 150.5640, -33.6990},     {"Winmalee", 150.6120, -33.6790},
    {"Lithgow", 150.1570, -33.4800},        {"Penrith", 150.6940, -33.7510},
    {"Port Stephens", 152.0910, -32.7180},  {"Newcastle", 151.7817, -32.9283},
    {"Wollongong", 150.8931, -34.4278},     {"Gosford", 151.3420, -33.4260},
    {"Brisbane", 153.0251, -27.4698},       {"Bundaberg", 152.3489, -24.8661},
    {"Rockhampton", 150.5117, -23.3781},    {"Cairns", 145.7781, -16.9186},
    {"Townsville", 146.8169, -19.2590},     {"Melbourne", 144.9631, -37.8136},
    {"Geelong", 144.3607, -38.1499},        {"Ballarat", 143.8503, -37.5622},
    {"Bendigo", 144.2794, -36.7570},        {"Hobart", 147.3272, -42.8821},
    {"Adelaide", 138.6007, -34.9285},       {"Perth", 115.8605, -31.9505},
    {"Darwin", 130.8456, -12.4634},         {"Canberra", 149.1300, -35.2809},
};

constexpr const char* kAgencies[] = {"NSWRFS", "QldFES", "CFA_Updates", "RedCross_AU",
                                     "abcemergency", "BOM_au", "NSWSES", "VicEmergency"};

struct Hazard {
  const char* noun;   // "bushfire"
  const char* tag;    // hashtag body
  const char* alt;    // second keyword
  const char* verb;   // "burning"
};

constexpr Hazard kHazards[] = {
    {"bushfire", "nswfires", "smoke", "burning"},
    {"fire", "fire", "blaze", "spreading"},
    {"flood", "floods", "flooding", "rising"},
    {"storm", "storm", "hail", "hitting"},
    {"cyclone", "cyclone", "storm", "approaching"},
    {"earthquake", "quake", "tremor", "felt"},
    {"ambulance", "emergency", "injured", "responding"},
};

constexpr const char* kReports[] = {
    "{Hz} near {place} right now, {verb} fast #{tag}",
    "Huge {hz} at {place}, {alt} everywhere",
    "#{tag} {place} residents told to evacuate",
    "Can see the {hz} from {place}, {alt} is terrible",
    "{place} {hz} update: still {verb}, stay safe everyone",
    "Roads closed around {place} due to {hz} #{tag}",
    "Praying for everyone in {place} tonight #{tag}",
    "{alt} and {hz} reported in {place} area",
    "Our street in {place} is affected by the {hz}",
    "Thinking of the firefighters and volunteers at {place} {hz}",
};

constexpr const char* kAgencyPosts[] = {
    "Emergency warning: {hz} at {place}. Follow advice of authorities #{tag}",
    "Watch and act: {hz} {verb} near {place}. Prepare to leave",
    "Evacuation centre open for {place} residents affected by {hz}",
    "Update on {place} {hz}: crews on scene, avoid the area",
};

constexpr const char* kAngry[] = {
    "{Exp} this {hz} in {place}, still no help here",
    "Where the {exp} are the crews? {Hz} in {place} getting worse",
    "So {exp} angry, {place} {hz} and power cut again",
    "What the {exp}, {hz} {verb} through {place} and nobody told us",
};

constexpr const char* kExpletives[] = {"damn", "bloody", "shit", "fuck", "crap", "hell"};

constexpr const char* kNoise[] = {
    "Click here to win a free iPhone #fire http://spam.example/win",
    "My mixtape is fire, go listen now",
    "We didn't start the fire, it was always burning since the world was turning",
    "Free followers fast, follow back #flood",
    "Knock knock, who is there? Storm. Storm who?",
    "Now playing: Ring of Fire on the radio",
    "Buy now: flood insurance promo code SAVE10",
};

constexpr const char* kChatter[] = {
    "Lovely coffee in {place} this morning",
    "Traffic on the way to {place} is slow today",
    "Great game last night in {place}",
    "Anyone know a good dentist in {place}?",
};

constexpr const char* kOffTopic[] = {
    "Fire up the barbie this weekend in {place}",
    "Flood of emails today, need a holiday",
    "That new cafe in {place} is fire",
};

void replace_all(std::string& s, std::string_view from, std::string_view to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

std::string capitalize(std::string s) {
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 32);
  return s;
}

std::string hex_id(uint64_t v) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%012llx", static_cast<unsigned long long>(v & 0xffffffffffffULL));
  return buf;
}

}  // namespace

std::span<const SyntheticPlace> synthetic_places() { return kPlaces; }
std::span<const char* const> synthetic_agencies() { return kAgencies; }

SyntheticSource::SyntheticSource(SyntheticOptions opts)
    : opts_(opts), rng_(opts.seed), clock_(opts.start) {}

std::string SyntheticSource::Describe() const {
  return "synthetic:" + std::to_string(opts_.seed) + ":" + std::to_string(opts_.count);
}

const SyntheticSource::Incident& SyntheticSource::ActiveIncident() {
  std::erase_if(incidents_, [&](const Incident& i) { return i.ends < clock_; });
  if (incidents_.empty() || (incidents_.size() < 7 && Chance(3))) {
    Incident inc;
    inc.hazard = static_cast<int>(Pick(std::size(kHazards)));
    inc.place = static_cast<int>(Pick(std::size(kPlaces)));
    inc.ends = clock_ + std::chrono::hours(3 + static_cast<int64_t>(Pick(16)));
    incidents_.push_back(inc);
    return incidents_.back();
  }
  // Newer incidents get more traffic.
  const size_t n = incidents_.size();
  const size_t idx = Chance(60) ? n - 1 : Pick(n);
  return incidents_[idx];
}

std::string SyntheticSource::Fill(std::string_view tmpl, const Incident& inc) {
  const Hazard& hz = kHazards[inc.hazard];
  std::string s(tmpl);
  const char* exp = kExpletives[Pick(std::size(kExpletives))];
  replace_all(s, "{Hz}", capitalize(hz.noun));
  replace_all(s, "{hz}", hz.noun);
  replace_all(s, "{tag}", hz.tag);
  replace_all(s, "{alt}", hz.alt);
  replace_all(s, "{verb}", hz.verb);
  replace_all(s, "{Exp}", capitalize(exp));
  replace_all(s, "{exp}", exp);
  replace_all(s, "{place}", kPlaces[inc.place].name);
  return s;
}

std::string SyntheticSource::User() {
  return "user" + std::to_string(Pick(900));
}

std::optional<RawPost> SyntheticSource::Next() {
  if (emitted_ >= opts_.count) return std::nullopt;
  const uint64_t index = emitted_++;

  clock_ += Seconds(static_cast<int64_t>(Pick(static_cast<uint64_t>(2 * opts_.mean_gap_secs + 1))));
  RawPost raw;
  raw.id = std::to_string(390000000000000000ULL + opts_.seed * 1000000ULL + index);
  raw.created_at = clock_;
  raw.source_tag = SourceTag::kSynthetic;
  if (Chance(2)) raw.created_at -= Seconds(1 + static_cast<int64_t>(Pick(180)));

  const Incident& inc = ActiveIncident();
  const SyntheticPlace& place = kPlaces[inc.place];
  const uint64_t roll = Pick(100);
  bool is_report = false;
  if (roll < 52) {
    raw.author = User();
    raw.text = Fill(kReports[Pick(std::size(kReports))], inc);
    is_report = true;
  } else if (roll < 60) {
    raw.author = kAgencies[Pick(std::size(kAgencies))];
    raw.text = Fill(kAgencyPosts[Pick(std::size(kAgencyPosts))], inc);
  } else if (roll < 65) {
    raw.author = User();
    raw.text = "RT @" + std::string(kAgencies[Pick(std::size(kAgencies))]) + ": " +
               Fill(kAgencyPosts[Pick(std::size(kAgencyPosts))], inc);
  } else if (roll < 70) {
    raw.author = User();
    raw.text = Fill(kAngry[Pick(std::size(kAngry))], inc);
    is_report = true;
  } else if (roll < 78) {
    raw.author = User();
    raw.text = kNoise[Pick(std::size(kNoise))];
  } else if (roll < 85) {
    raw.author = User();
    raw.text = Fill(kChatter[Pick(std::size(kChatter))], inc);
  } else if (roll < 93 && have_last_report_) {
    // Same account repeating itself.
    raw.author = last_report_.author;
    raw.text = last_report_.text;
    raw.coords = last_report_.coords;
  } else {
    raw.author = User();
    raw.text = Fill(kOffTopic[Pick(std::size(kOffTopic))], inc);
  }

  if (is_report) {
    if (Chance(30)) {
      const double jlon = (static_cast<double>(Pick(1001)) - 500.0) / 10000.0;
      const double jlat = (static_cast<double>(Pick(1001)) - 500.0) / 10000.0;
      raw.coords = GeoPoint{place.lon + jlon, place.lat + jlat};
    }
    if (Chance(15)) {
      raw.text += " http://pic.act.example/" + hex_id(rng_()) + (Chance(50) ? ".jpg" : ".png");
    } else if (Chance(10)) {
      raw.text += " http://t.co/" + hex_id(rng_());
    }
    last_report_ = raw;
    have_last_report_ = true;
  }
  return raw;
}

std::vector<Json> synthetic_media_records(uint64_t seed, uint64_t count, Timestamp start, int hours,
                                          const std::string& id_prefix) {
  static constexpr const char* kCaptions[] = {
      "{alt} over {place} this afternoon #{tag}",
      "{Hz} damage in {place}",
      "View of the {hz} from {place}",
      "Volunteers helping after the {hz} at {place}",
      "Sunset at {place} beach",
      "Brunch in {place} with friends",
  };
  std::mt19937_64 rng(seed);
  auto pick = [&](uint64_t n) { return rng() % n; };
  std::vector<Json> out;
  out.reserve(count);
  const int64_t span_secs = static_cast<int64_t>(hours) * 3600;
  for (uint64_t i = 0; i < count; ++i) {
    const SyntheticPlace& place = kPlaces[pick(std::size(kPlaces))];
    const Hazard& hz = kHazards[pick(std::size(kHazards))];
    std::string caption = kCaptions[pick(std::size(kCaptions))];
    replace_all(caption, "{Hz}", capitalize(hz.noun));
    replace_all(caption, "{hz}", hz.noun);
    replace_all(caption, "{alt}", capitalize(hz.alt));
    replace_all(caption, "{tag}", hz.tag);
    replace_all(caption, "{place}", place.name);
    const Timestamp ts = start + Seconds(static_cast<int64_t>(pick(static_cast<uint64_t>(span_secs))));
    const std::string id = id_prefix + std::to_string(i + 1);
    Json j = {{"id", id},
              {"url", "http://media.act.example/" + id + ".jpg"},
              {"caption", caption},
              {"created_at", format_timestamp(ts)}};
    if (pick(100) < 60) {
      const double jlon = (static_cast<double>(pick(2001)) - 1000.0) / 10000.0;
      const double jlat = (static_cast<double>(pick(2001)) - 1000.0) / 10000.0;
      j["coordinates"] = {place.lon + jlon, place.lat + jlat};
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace act::ingest
