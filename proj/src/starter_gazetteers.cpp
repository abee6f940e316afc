// Copyright 2026 The HaS Gateway Authors.
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

// Shipped entity lists. Gazetteer types use one list both for recognition
// and as the surrogate pool; rule types only have fallback surrogates for
// surfaces the format-preserving generators cannot parse.

#include "has/recognizer.hpp"

namespace has {
namespace {

const std::vector<std::string> kPerson = {
    "John Smith",     "Maria Garcia",   "Wei Zhang",      "Aisha Khan",
    "David Miller",   "Emma Johnson",   "Liam O'Brien",   "Sofia Rossi",
    "Hiroshi Tanaka", "Fatima Ali",     "Carlos Mendez",  "Anna Kowalski",
    "James Wilson",   "Olivia Brown",   "Noah Davis",     "Priya Patel",
    "Lukas Schmidt",  "Chloe Martin",   "Mohammed Hassan", "Elena Petrova",
    "Sarah Thompson", "Daniel Lee",     "Grace Kim",      "Ahmed Saleh",
    "Isabella Costa", "Thomas Müller",  "Yuki Sato",      "Omar Farouk",
    "Laura Bianchi",  "Peter Novak",    "Rachel Green",   "Michael Chen",
    "Hannah Fischer", "Victor Dubois",  "Nina Ivanova",   "Samuel Okafor",
    "Julia Weber",    "Ethan Clark",    "Zara Ahmed",     "Marco Silva",
    "Ingrid Larsen",  "Kenji Watanabe", "Amara Nwosu",    "Lucas Moreau",
    "Sven Andersson", "Leila Haddad",   "Robert Hughes",  "Mei Lin",
    "Pablo Ortega",   "Claire Dupont",  "Tom Baker",      "Alice Walker",
};

const std::vector<std::string> kOrg = {
    "FBI",
    "CIA",
    "NSA",
    "Interpol",
    "Europol",
    "United Nations",
    "World Bank",
    "European Central Bank",
    "Federal Reserve",
    "Central Intelligence Agency",
    "Acme Corp",
    "Globex Corporation",
    "Initech",
    "Umbrella Corporation",
    "Stark Industries",
    "Wayne Enterprises",
    "Microsoft",
    "Google",
    "Amazon",
    "Siemens",
    "Toyota",
    "Samsung",
    "Reuters",
    "BBC",
    "Red Cross",
    "Greenpeace",
    "Harvard University",
    "Oxford University",
    "Stanford University",
    "NASA",
    "SpaceX",
    "Tesla",
    "Pfizer",
    "Unilever",
    "Barclays",
    "HSBC",
    "Deutsche Bank",
    "Goldman Sachs",
    "Manchester United",
    "Real Madrid",
    "Premier League",
    "IMF",
    "OPEC",
    "NATO",
    "Ministry of Finance",
    "Bank of England",
};

const std::vector<std::string> kGpe = {
    "Washington DC", "Washington, D.C.", "New York City", "New York",
    "London",        "Paris",            "Berlin",        "Tokyo",
    "Beijing",       "Shanghai",         "Moscow",        "Madrid",
    "Rome",          "Toronto",          "Sydney",        "Mumbai",
    "Cairo",         "Nairobi",          "Lagos",         "Mexico City",
    "Brazil",        "Canada",           "France",        "Germany",
    "Japan",         "China",            "India",         "Italy",
    "Spain",         "Kenya",            "Nigeria",       "Egypt",
    "Australia",     "United States",    "United Kingdom", "California",
    "Texas",         "Bavaria",          "Ontario",       "Singapore",
    "Seoul",         "Lisbon",           "Vienna",        "Dublin",
    "Oslo",          "Stockholm",        "Zurich",        "Geneva",
    "Chicago",       "Boston",           "San Francisco", "Los Angeles",
};

const std::vector<std::string> kLoc = {
    "Alps",           "Himalayas",         "Sahara",
    "Amazon River",   "Pacific Ocean",     "Atlantic Ocean",
    "Mediterranean Sea", "Lake Geneva",    "Rocky Mountains",
    "Andes",          "Nile",              "Danube",
    "Gobi Desert",    "Black Forest",      "Mount Everest",
    "Silicon Valley", "Arctic",            "Baltic Sea",
    "North Sea",      "Great Barrier Reef", "Lake Victoria",
    "Mississippi River",
};

const std::vector<std::string> kNorp = {
    "American",   "Americans",  "British",    "French",    "German",
    "Germans",    "Chinese",    "Japanese",   "Indian",    "Russian",
    "Italian",    "Spanish",    "Brazilian",  "Kenyan",    "Nigerian",
    "Canadian",   "Australian", "Mexican",    "European",  "Europeans",
    "Catholic",   "Muslim",     "Buddhist",   "Protestant", "Democrats",
    "Republicans", "Conservatives", "Socialists",
};

const std::vector<std::string> kFac = {
    "Golden Gate Bridge",    "Heathrow Airport",   "JFK Airport",
    "Eiffel Tower",          "Empire State Building", "Brooklyn Bridge",
    "Wembley Stadium",       "Pentagon",           "Changi Airport",
    "Hoover Dam",            "Channel Tunnel",     "Route 66",
    "Interstate 95",         "Grand Central Terminal", "Sydney Opera House",
    "Louvre",                "Burj Khalifa",       "Tower Bridge",
    "Madison Square Garden", "Gatwick Airport",
};

const std::vector<std::string> kLaw = {
    "Clean Air Act",          "Patriot Act",           "Affordable Care Act",
    "Data Protection Act",    "GDPR",                  "Civil Rights Act",
    "Digital Services Act",   "Freedom of Information Act", "Dodd-Frank Act",
    "Sarbanes-Oxley Act",     "Geneva Conventions",    "Paris Agreement",
    "Treaty of Versailles",   "Magna Carta",           "First Amendment",
    "Second Amendment",       "Kyoto Protocol",        "Fair Labor Standards Act",
};

const std::vector<std::string> kLanguage = {
    "English", "Mandarin", "Cantonese", "Swahili", "Hindi",   "Arabic",
    "Portuguese", "Esperanto", "Latin", "Bengali", "Urdu",    "Tagalog",
    "Dutch",   "Korean",   "Turkish",  "Polish",  "Greek",   "Hebrew",
};

const std::vector<std::string> kWorkOfArt = {
    "Mona Lisa",        "War and Peace",     "Hamlet",
    "The Great Gatsby", "Pride and Prejudice", "Bohemian Rhapsody",
    "Star Wars",        "The Godfather",     "Don Quixote",
    "Guernica",         "The Starry Night",  "Moby Dick",
    "Hey Jude",         "Les Misérables",    "The Last Supper",
    "Swan Lake",        "Romeo and Juliet",  "Abbey Road",
    "Citizen Kane",     "Ulysses",           "Frankenstein",
    "The Odyssey",      "Jurassic Park",
};

const std::vector<std::string> kDateFallback = {
    "last week",   "next month",  "early spring", "the previous quarter",
    "late autumn", "midsummer",   "the weekend",  "the coming winter",
};

const std::vector<std::string> kTimeFallback = {
    "noon", "midnight", "dawn", "dusk", "early morning", "late evening",
    "lunchtime",
};

const std::vector<std::string> kMoneyFallback = {
    "a modest sum", "several million dollars", "an undisclosed amount",
    "a few thousand euros",
};

const std::vector<std::string> kPercentFallback = {
    "a small fraction", "roughly half", "about a third", "nearly a quarter",
};

const std::vector<std::string> kQuantityFallback = {
    "several tons", "a few miles", "a dozen kilograms", "many litres",
};

const std::vector<std::string> kEmpty;

}  // namespace

const std::vector<std::string>& starter_entries(EntityType type) {
  switch (type) {
    case EntityType::kPerson:
      return kPerson;
    case EntityType::kOrg:
      return kOrg;
    case EntityType::kGpe:
      return kGpe;
    case EntityType::kLoc:
      return kLoc;
    case EntityType::kNorp:
      return kNorp;
    case EntityType::kFac:
      return kFac;
    case EntityType::kLaw:
      return kLaw;
    case EntityType::kLanguage:
      return kLanguage;
    case EntityType::kWorkOfArt:
      return kWorkOfArt;
    default:
      return kEmpty;
  }
}

const std::vector<std::string>& starter_surrogates(EntityType type) {
  switch (type) {
    case EntityType::kDate:
      return kDateFallback;
    case EntityType::kTime:
      return kTimeFallback;
    case EntityType::kMoney:
      return kMoneyFallback;
    case EntityType::kPercent:
      return kPercentFallback;
    case EntityType::kQuantity:
      return kQuantityFallback;
    default:
      return starter_entries(type);
  }
}

}  // namespace has
