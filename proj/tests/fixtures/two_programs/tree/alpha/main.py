import util

print(util.greet("alpha"))
