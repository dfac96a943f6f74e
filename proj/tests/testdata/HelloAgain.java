public class HelloAgain {

    public static void main(String[] args) {
        int factorial = 0;
        for (int i = 0; i < 10; i++) {
            factorial++;
        }
        System.out.println("Factorial = " + factorial);
    }
}
