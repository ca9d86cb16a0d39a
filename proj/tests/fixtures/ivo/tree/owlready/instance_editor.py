# Editor widget shipped with the library; IVO never opens it.
from owlready import Ontology
import Tkinter


def edit(onto):
    Tkinter.Tk().mainloop()
