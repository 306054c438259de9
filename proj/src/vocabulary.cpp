#include <cstddef>
#include <string>
#include <vector>

namespace docalign {

namespace {

// 1000 common English non-stopword tokens, pre-normalized. The synthetic
// generator draws from a prefix of this list so callers can force token
// duplication by shrinking the effective vocabulary.
const char* const kVocabulary[] = {
    "time", "year", "people", "way", "day", "man", "thing", "woman", "life",
    "child", "world", "school", "state", "family", "student", "group",
    "country", "problem", "hand", "part", "place", "case", "week", "company",
    "system", "program", "question", "work", "government", "number", "night",
    "point", "home", "water", "room", "mother", "area", "money", "story",
    "fact", "month", "lot", "right", "study", "book", "eye", "job", "word",
    "business", "issue", "side", "kind", "head", "house", "service",
    "friend", "father", "power", "hour", "game", "line", "end", "member",
    "law", "car", "city", "community", "name", "president", "team", "minute",
    "idea", "body", "information", "back", "parent", "face", "others",
    "level", "office", "door", "health", "person", "art", "war", "history",
    "party", "result", "change", "morning", "reason", "research", "girl",
    "guy", "moment", "air", "teacher", "force", "education", "foot", "boy",
    "age", "policy", "process", "music", "market", "sense", "nation", "plan",
    "college", "interest", "death", "experience", "effect", "use", "class",
    "control", "care", "field", "development", "role", "effort", "rate",
    "heart", "drug", "show", "leader", "light", "voice", "wife", "whole",
    "police", "mind", "price", "report", "decision", "son", "view",
    "relationship", "town", "road", "arm", "difference", "value", "building",
    "action", "model", "season", "society", "tax", "director", "position",
    "player", "record", "paper", "space", "ground", "form", "event",
    "official", "matter", "center", "couple", "site", "project", "activity",
    "star", "table", "need", "court", "american", "oil", "situation", "cost",
    "industry", "figure", "street", "image", "phone", "data", "picture",
    "practice", "piece", "land", "product", "doctor", "wall", "patient",
    "worker", "news", "test", "movie", "north", "love", "support",
    "technology", "third", "kid", "quality", "notion", "risk", "security",
    "analysis", "performance", "source", "computer", "century", "evidence",
    "window", "account", "region", "card", "approach", "goal", "list",
    "film", "simple", "train", "future", "manager", "stage", "rule", "rest",
    "science", "article", "language", "growth", "club", "section", "series",
    "weight", "purpose", "contract", "nature", "bank", "pattern", "nurse",
    "chance", "sport", "board", "challenge", "newspaper", "benefit",
    "disease", "success", "staff", "ability", "hospital", "fund", "attack",
    "argument", "campaign", "sound", "network", "collection", "summer",
    "theory", "capital", "gun", "crime", "coach", "concern", "design",
    "election", "blood", "culture", "opportunity", "attention", "dream",
    "author", "marriage", "condition", "shoulder", "analyst", "song",
    "population", "environment", "respect", "standard", "medium", "choice",
    "property", "page", "fear", "size", "army", "bill", "stock",
    "production", "medicine", "ship", "strategy", "truth", "glass", "trade",
    "sign", "skin", "artist", "agreement", "economy", "anything", "dog",
    "horse", "dinner", "garden", "lawyer", "military", "exercise", "debate",
    "item", "kitchen", "direction", "style", "loss", "basis", "credit",
    "scene", "resource", "operation", "peace", "speech", "trial", "gas",
    "radio", "defense", "review", "partner", "conference", "revenue",
    "institution", "release", "bird", "opinion", "machine", "task",
    "surface", "discussion", "economics", "organization", "owner",
    "material", "device", "thanks", "salt", "river", "reality", "structure",
    "tree", "address", "bag", "note", "mission", "path", "career", "floor",
    "appeal", "failure", "comparison", "focus", "audience", "victim",
    "demand", "march", "survey", "politics", "hair", "version", "firm",
    "fish", "camera", "contrast", "brother", "freedom", "impact", "video",
    "restaurant", "reform", "pain", "title", "spring", "holiday", "bridge",
    "travel", "energy", "park", "plant", "target", "generation", "mistake",
    "egg", "union", "island", "chair", "majority", "software", "statement",
    "station", "nothing", "answer", "muscle", "corner", "method", "truck",
    "identity", "square", "context", "wood", "farm", "rock", "gift",
    "tradition", "administration", "feature", "winter", "silence", "variety",
    "requirement", "trip", "obligation", "cell", "estate", "athlete",
    "baseball", "basketball", "bathroom", "bottle", "branch", "bread",
    "breakfast", "cabinet", "cable", "candidate", "category", "ceiling",
    "chairman", "chapter", "character", "cheese", "chemical", "chest",
    "chicken", "chief", "circle", "citizen", "climate", "clock", "cloud",
    "cluster", "coast", "coffee", "colleague", "column", "combination",
    "comedy", "command", "commander", "comment", "commission", "committee",
    "communication", "competition", "complaint", "concept", "conclusion",
    "conduct", "confidence", "conflict", "confusion", "congress",
    "connection", "consequence", "constitution", "construction", "consumer",
    "contact", "container", "content", "contest", "contribution",
    "convention", "conversation", "cookie", "copy", "corn", "corporation",
    "cotton", "counter", "county", "courage", "cousin", "cream", "creation",
    "creature", "crew", "criticism", "crowd", "currency", "customer",
    "cycle", "dance", "danger", "database", "daughter", "dealer", "decade",
    "declaration", "decline", "decrease", "defendant", "deficit",
    "definition", "degree", "delivery", "democracy", "density", "department",
    "departure", "deposit", "depression", "depth", "description", "desert",
    "desire", "desk", "detail", "detective", "diamond", "diet", "dimension",
    "dirt", "disaster", "discipline", "discovery", "display", "distance",
    "distribution", "district", "document", "dollar", "drama", "drawer",
    "drawing", "dress", "driver", "earth", "east", "economist", "edge",
    "editor", "electricity", "element", "elevator", "emergency", "emotion",
    "emphasis", "employee", "employer", "employment", "engine", "engineer",
    "entrance", "episode", "equipment", "error", "escape", "essay",
    "establishment", "evening", "examination", "example", "exchange",
    "excitement", "excuse", "execution", "exhibition", "exit", "expansion",
    "expense", "explanation", "explosion", "expression", "extension",
    "extent", "fabric", "facility", "factor", "factory", "faith", "fall",
    "fan", "fantasy", "fashion", "fate", "fault", "feather", "feedback",
    "feeling", "fence", "festival", "fiction", "finding", "finger",
    "fishing", "flag", "flavor", "flight", "flower", "folk", "food",
    "football", "forest", "fortune", "foundation", "frame", "fruit", "fuel",
    "function", "funeral", "furniture", "gallery", "gap", "garage",
    "garbage", "gate", "gear", "gene", "gentleman", "gesture", "girlfriend",
    "glove", "grass", "guarantee", "guard", "guess", "guest", "guidance",
    "guide", "guitar", "habit", "hall", "handle", "harbor", "harm", "hat",
    "hearing", "heat", "height", "hell", "hero", "highway", "hill", "hint",
    "hip", "hole", "homework", "honey", "honor", "hook", "hope", "host",
    "hotel", "household", "housing", "humor", "hunger", "hunting", "husband",
    "ice", "illness", "illustration", "imagination", "immigration",
    "implement", "importance", "impression", "improvement", "incident",
    "income", "increase", "independence", "indication", "individual",
    "infection", "inflation", "influence", "ingredient", "initiative",
    "injury", "inquiry", "insect", "inside", "inspection", "inspector",
    "instance", "instruction", "instrument", "insurance", "intention",
    "interaction", "interview", "introduction", "invasion", "investigation",
    "investment", "invitation", "iron", "jacket", "jail", "judge",
    "judgment", "juice", "jury", "justice", "key", "king", "kiss", "knee",
    "knife", "knowledge", "lab", "label", "ladder", "lady", "lake", "lamp",
    "landscape", "lane", "laughter", "launch", "leadership", "leaf",
    "league", "lecture", "leg", "length", "lesson", "letter", "library",
    "license", "lifestyle", "lift", "limit", "link", "lip", "liquid",
    "literature", "load", "loan", "location", "lock", "log", "longitude",
    "look", "lunch", "luxury", "magazine", "mail", "maintenance", "makeup",
    "mall", "management", "manufacturer", "map", "margin", "mark",
    "marketing", "mask", "mass", "master", "match", "mate", "mathematics",
    "meal", "meaning", "measurement", "meat", "mechanism", "medal", "media",
    "meeting", "membership", "memory", "mention", "menu", "mess", "message",
    "metal", "meter", "midnight", "milk", "mine", "minister", "minority",
    "miracle", "mirror", "mixture", "mode", "monitor", "mood", "moon",
    "mortgage", "motion", "motivation", "motor", "mountain", "mouse",
    "mouth", "move", "movement", "mud", "murder", "museum", "mushroom",
    "nail", "narrative", "necessity", "neck", "negotiation", "neighbor",
    "neighborhood", "nerve", "nest", "nobody", "node", "noise", "nomination",
    "nonsense", "noon", "nose", "novel", "nuance", "oak", "obje", "obstacle",
    "occasion", "occupation", "ocean", "offense", "offer", "officer",
    "onion", "operator", "opponent", "option", "orange", "order", "ordinary",
    "organ", "origin", "outcome", "outfit", "outlet", "output", "oven",
    "owl", "ownership", "oxygen", "pace", "package", "pad", "paint",
    "painter", "painting", "pair", "palace", "pan", "panel", "panic",
    "pants", "parade", "pardon", "parish", "parking", "passage", "passenger",
    "passion", "past", "patent", "patience", "payment", "peak", "peanut",
    "pen", "penalty", "pencil", "pension", "pepper", "percentage",
    "perception", "permission", "personality", "perspective", "phase",
    "philosophy", "photo", "phrase", "physics", "piano", "pick", "pie",
    "pilot", "pin", "pipe", "pitch", "pizza", "plane", "planet", "plastic",
    "plate", "platform", "pleasure", "plenty", "poem", "poet", "poetry",
    "pole", "pollution", "pond", "pool", "portion", "portrait", "possession",
    "possibility", "pot", "potato", "poverty", "powder", "precedent",
    "preference", "pregnancy", "preparation", "presence", "presentation",
    "pressure", "pride", "priest", "principle", "printer", "priority",
    "prison", "privacy", "prize", "procedure", "profession", "professor",
    "profile", "profit", "promise", "promotion", "proof", "proportion",
    "proposal", "prosecution", "protection", "protein", "protest",
    "province", "provision", "psychology", "publicity", "punishment",
    "purchase", "pursuit", "puzzle", "quantity", "quarter", "queen", "quest",
    "rabbit", "race", "rack", "rail", "rain", "range", "rank", "ratio",
    "reaction", "reader", "reception", "recipe", "recognition",
    "recommendation", "recording", "recovery", "reduction", "reference",
    "reflection", "refrigerator", "refugee", "regret", "regulation",
    "rejection", "relation", "relative", "relief", "remark", "reminder",
    "removal", "repair", "repeat",
};

}  // namespace

const std::vector<std::string>& synth_vocabulary() {
    static const std::vector<std::string> vocab(
        kVocabulary,
        kVocabulary + sizeof(kVocabulary) / sizeof(kVocabulary[0]));
    return vocab;
}

}  // namespace docalign
