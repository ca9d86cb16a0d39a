PAIRS = "nncPairs.txt"


def fix_plurals(sentence):
    with open(PAIRS) as f:
        for line in f:
            if "," in line:
                noun, plural = line.strip().split(",")
                sentence = sentence.replace(noun + "s", plural)
    return sentence
